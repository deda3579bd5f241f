// Recorded payloads from the advisor HTTP API (synthetic training data,
// linear models, fixed seeds). Regenerate by re-recording against a running
// service; do not edit numbers by hand.

import type {
  HealthResponse,
  RecommendRequest,
  RecommendResponse,
  SchemaResponse,
  WhatifRequest,
  WhatifResponse,
} from "../src/types";

export interface RecordedScenario {
  request: RecommendRequest;
  response: RecommendResponse;
}

export interface RecordedWhatif {
  request: WhatifRequest;
  response: WhatifResponse;
}

export const SCHEMA: SchemaResponse = {
  "fields": [
    {
      "name": "OpenCreditLines",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "ProsperGrade",
      "input": "select",
      "classes": [
        "AA",
        "A",
        "B",
        "C",
        "D",
        "E",
        "HR"
      ],
      "domain": null,
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "ProsperScore",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "ListingCategory",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "CurrentCreditLines",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "TotalCreditLinespast7years",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "OpenRevolvingAccounts",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "OpenRevolvingMonthlyPayment",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "TotalInquiries",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "CurrentDelinquencies",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "AmountDelinquent",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "Occupation",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "PublicRecordsLast10Years",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "RevolvingCreditBalance",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "TradesNeverDelinquent",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "TotalTrades",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "StatedMonthlyIncome",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "AvailableBankcardCredit",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "TradesOpenedLast6Months",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "BankcardUtilization",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "Homeownership",
      "input": "select",
      "classes": [
        "Not own",
        "Own"
      ],
      "domain": null,
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "DebtToIncomeRatio",
      "input": "number",
      "classes": null,
      "domain": [
        0.0,
        1.0
      ],
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "InquiriesLast6Months",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "LoanAmount",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "CreditScoreRangeLower",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "EmploymentStatusDuration",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "DelinquenciesLast7Years",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "Term",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate"
      ]
    },
    {
      "name": "BorrowerState",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "EmploymentStatus",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "Description",
      "input": "text",
      "classes": null,
      "domain": null,
      "used_by": [
        "traditional_rate",
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "BorrowerMaximumRate",
      "input": "number",
      "classes": null,
      "domain": [
        0.0,
        1.0
      ],
      "used_by": [
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "FundingOption",
      "input": "select",
      "classes": [
        "Close when funded",
        "Open for duration"
      ],
      "domain": null,
      "used_by": [
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "Images",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "Duration",
      "input": "number",
      "classes": null,
      "domain": null,
      "used_by": [
        "bidding_rate",
        "bidding_success"
      ]
    },
    {
      "name": "HasVerifiedBankAccount",
      "input": "select",
      "classes": [
        "False",
        "True"
      ],
      "domain": null,
      "used_by": [
        "bidding_rate",
        "bidding_success"
      ]
    }
  ],
  "whatif_fields": [
    "BorrowerMaximumRate",
    "SentimentScore",
    "LoanAmount"
  ]
};

export const HEALTH: HealthResponse = {
  "status": "ok",
  "seed": 5,
  "g_star": 1.0,
  "models": {
    "traditional_rate": {
      "kind": "linear",
      "task": "regression",
      "n_features": 31,
      "artifact_version": 1
    },
    "bidding_rate": {
      "kind": "linear",
      "task": "regression",
      "n_features": 13,
      "artifact_version": 1
    },
    "bidding_success": {
      "kind": "logit",
      "task": "classification",
      "n_features": 13,
      "artifact_version": 1
    }
  }
};

export const SCENARIOS: RecordedScenario[] = [
  {
    "request": {
      "request_id": "scenario-01",
      "features": {
        "OpenCreditLines": 8.0,
        "ProsperGrade": "D",
        "ProsperScore": 5.0,
        "ListingCategory": 12.0,
        "CurrentCreditLines": 6.0,
        "TotalCreditLinespast7years": 19.0,
        "OpenRevolvingAccounts": 7.0,
        "OpenRevolvingMonthlyPayment": 914.89,
        "TotalInquiries": 5.0,
        "CurrentDelinquencies": 1.0,
        "AmountDelinquent": 0.7,
        "Occupation": 11.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 15420.97,
        "TradesNeverDelinquent": 0.7884231322972712,
        "TotalTrades": 21.0,
        "StatedMonthlyIncome": 3200.88,
        "AvailableBankcardCredit": 1893.69,
        "TradesOpenedLast6Months": 1.0,
        "BankcardUtilization": 0.35558640957847704,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.20788625636090105,
        "InquiriesLast6Months": 2.0,
        "LoanAmount": 4549.0,
        "CreditScoreRangeLower": 680.0,
        "EmploymentStatusDuration": 75.0,
        "DelinquenciesLast7Years": 3.0,
        "Term": 36.0,
        "BorrowerState": 17.0,
        "EmploymentStatus": 6.0,
        "SentimentScore": 0.5864361043613661,
        "Duration": 7.0,
        "BorrowerMaximumRate": 0.2274746330854851,
        "FundingOption": "Close when funded",
        "Images": 1.0,
        "HasVerifiedBankAccount": "False",
        "DescriptionLength": 182.0
      },
      "description": "Payoff Credit Cards",
      "max_rate": 0.05
    },
    "response": {
      "request_id": "scenario-01",
      "sentiment_score": 0.38181916792267817,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2262254820528298,
        "success": 0.81,
        "distance": 0.2954284494256354
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.10345315153329308,
        "success": 0.8839809997731083,
        "distance": 0.15544440477488405
      },
      "chosen": "bidding",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9990762355706065
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-02",
      "features": {
        "OpenCreditLines": 5.0,
        "ProsperGrade": "E",
        "ProsperScore": 4.0,
        "ListingCategory": 0.0,
        "CurrentCreditLines": 4.0,
        "TotalCreditLinespast7years": 30.0,
        "OpenRevolvingAccounts": 7.0,
        "OpenRevolvingMonthlyPayment": 273.34,
        "TotalInquiries": 4.0,
        "CurrentDelinquencies": 2.0,
        "AmountDelinquent": 1.27,
        "Occupation": 16.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 6835.6,
        "TradesNeverDelinquent": 0.7550405332902191,
        "TotalTrades": 29.0,
        "StatedMonthlyIncome": 5051.11,
        "AvailableBankcardCredit": 9168.75,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.6579770678643405,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.23808100691035963,
        "InquiriesLast6Months": 3.0,
        "LoanAmount": 6145.0,
        "CreditScoreRangeLower": 630.0,
        "EmploymentStatusDuration": 182.0,
        "DelinquenciesLast7Years": 2.0,
        "Term": 60.0,
        "BorrowerState": 26.0,
        "EmploymentStatus": 0.0,
        "SentimentScore": 0.5609953780190983,
        "Duration": 8.0,
        "BorrowerMaximumRate": 0.3034449383495637,
        "FundingOption": "Close when funded",
        "Images": 0.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 157.0
      }
    },
    "response": {
      "request_id": "scenario-02",
      "sentiment_score": 0.5609953780190983,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2933677075634078,
        "success": 0.81,
        "distance": 0.34952054566364066
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.22247614634334906,
        "success": 0.038822617767474324,
        "distance": 0.9865888686819643
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.576881183348193
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-03",
      "features": {
        "OpenCreditLines": 11.0,
        "ProsperGrade": "B",
        "ProsperScore": 6.0,
        "ListingCategory": 10.0,
        "CurrentCreditLines": 14.0,
        "TotalCreditLinespast7years": 24.0,
        "OpenRevolvingAccounts": 2.0,
        "OpenRevolvingMonthlyPayment": 519.9,
        "TotalInquiries": 4.0,
        "CurrentDelinquencies": 2.0,
        "AmountDelinquent": 0.2,
        "Occupation": 34.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 9668.97,
        "TradesNeverDelinquent": 0.8016396133776096,
        "TotalTrades": 18.0,
        "StatedMonthlyIncome": 1614.78,
        "AvailableBankcardCredit": 1870.41,
        "TradesOpenedLast6Months": 1.0,
        "BankcardUtilization": 0.38835752597136464,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.21497485470689143,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 11757.0,
        "CreditScoreRangeLower": 730.0,
        "EmploymentStatusDuration": 46.0,
        "DelinquenciesLast7Years": 0.0,
        "Term": 36.0,
        "BorrowerState": 6.0,
        "EmploymentStatus": 3.0,
        "SentimentScore": 0.2041370998778249,
        "Duration": 8.0,
        "BorrowerMaximumRate": 0.2290654280369484,
        "FundingOption": "Close when funded",
        "Images": 0.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 206.0
      }
    },
    "response": {
      "request_id": "scenario-03",
      "sentiment_score": 0.2041370998778249,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.16537388327950908,
        "success": 0.81,
        "distance": 0.25188989910463794
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.1794938414377163,
        "success": 0.019732103320499423,
        "distance": 0.9965656969686043
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9223132219902465
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-04",
      "features": {
        "OpenCreditLines": 7.0,
        "ProsperGrade": "A",
        "ProsperScore": 9.0,
        "ListingCategory": 3.0,
        "CurrentCreditLines": 18.0,
        "TotalCreditLinespast7years": 25.0,
        "OpenRevolvingAccounts": 7.0,
        "OpenRevolvingMonthlyPayment": 303.56,
        "TotalInquiries": 5.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 26.96,
        "Occupation": 35.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 8638.17,
        "TradesNeverDelinquent": 0.939886964054004,
        "TotalTrades": 20.0,
        "StatedMonthlyIncome": 2986.87,
        "AvailableBankcardCredit": 14935.35,
        "TradesOpenedLast6Months": 3.0,
        "BankcardUtilization": 0.31827231378196025,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.06559305750687935,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 11139.0,
        "CreditScoreRangeLower": 790.0,
        "EmploymentStatusDuration": 40.0,
        "DelinquenciesLast7Years": 0.0,
        "Term": 36.0,
        "BorrowerState": 4.0,
        "EmploymentStatus": 0.0,
        "SentimentScore": 0.5309805733085173,
        "Duration": 11.0,
        "BorrowerMaximumRate": 0.15789888269584754,
        "FundingOption": "Close when funded",
        "Images": 0.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 214.0
      },
      "description": "help me please"
    },
    "response": {
      "request_id": "scenario-04",
      "sentiment_score": 0.401923825269382,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.11388116779259136,
        "success": 0.81,
        "distance": 0.2215150567744873
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.1476245575598113,
        "success": 0.4573747819883635,
        "distance": 0.5623478791788105
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9902758343578262
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-05",
      "features": {
        "OpenCreditLines": 4.0,
        "ProsperGrade": "A",
        "ProsperScore": 8.0,
        "ListingCategory": 16.0,
        "CurrentCreditLines": 7.0,
        "TotalCreditLinespast7years": 30.0,
        "OpenRevolvingAccounts": 4.0,
        "OpenRevolvingMonthlyPayment": 383.69,
        "TotalInquiries": 5.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 643.84,
        "Occupation": 22.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 5423.42,
        "TradesNeverDelinquent": 0.8788788608322414,
        "TotalTrades": 29.0,
        "StatedMonthlyIncome": 3532.02,
        "AvailableBankcardCredit": 18133.55,
        "TradesOpenedLast6Months": 2.0,
        "BankcardUtilization": 0.3929537128428159,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.07660386178455024,
        "InquiriesLast6Months": 3.0,
        "LoanAmount": 10950.0,
        "CreditScoreRangeLower": 790.0,
        "EmploymentStatusDuration": 95.0,
        "DelinquenciesLast7Years": 2.0,
        "Term": 36.0,
        "BorrowerState": 42.0,
        "EmploymentStatus": 5.0,
        "SentimentScore": -0.45029703972241397,
        "Duration": 4.0,
        "BorrowerMaximumRate": 0.18161067797220276,
        "FundingOption": "Close when funded",
        "Images": 1.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 97.0
      },
      "max_rate": 0.21
    },
    "response": {
      "request_id": "scenario-05",
      "sentiment_score": -0.45029703972241397,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.13108512561511182,
        "success": 0.81,
        "distance": 0.2308317789160098
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.13380330465544632,
        "success": 0.0002720089943267749,
        "distance": 1.0086423451040303
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9682142727831774
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-06",
      "features": {
        "OpenCreditLines": 5.0,
        "ProsperGrade": "C",
        "ProsperScore": 6.0,
        "ListingCategory": 11.0,
        "CurrentCreditLines": 6.0,
        "TotalCreditLinespast7years": 20.0,
        "OpenRevolvingAccounts": 5.0,
        "OpenRevolvingMonthlyPayment": 464.28,
        "TotalInquiries": 1.0,
        "CurrentDelinquencies": 1.0,
        "AmountDelinquent": 421.02,
        "Occupation": 3.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 13215.34,
        "TradesNeverDelinquent": 0.9080161324345629,
        "TotalTrades": 22.0,
        "StatedMonthlyIncome": 4025.13,
        "AvailableBankcardCredit": 17877.34,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.48371264468257735,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.16565600792907634,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 9010.0,
        "CreditScoreRangeLower": 720.0,
        "EmploymentStatusDuration": 64.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 12.0,
        "BorrowerState": 14.0,
        "EmploymentStatus": 1.0,
        "SentimentScore": 0.05332627513564983,
        "Duration": 8.0,
        "BorrowerMaximumRate": 0.23620015669048602,
        "FundingOption": "Open for duration",
        "Images": 2.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 429.0
      }
    },
    "response": {
      "request_id": "scenario-06",
      "sentiment_score": 0.05332627513564983,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.19820356852433924,
        "success": 0.81,
        "distance": 0.27456266056363604
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.18981380383887436,
        "success": 0.01470355130066055,
        "distance": 1.0034133604588453
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9671960321419032
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-07",
      "features": {
        "OpenCreditLines": 12.0,
        "ProsperGrade": "A",
        "ProsperScore": 8.0,
        "ListingCategory": 5.0,
        "CurrentCreditLines": 6.0,
        "TotalCreditLinespast7years": 29.0,
        "OpenRevolvingAccounts": 9.0,
        "OpenRevolvingMonthlyPayment": 307.29,
        "TotalInquiries": 5.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 85.04,
        "Occupation": 35.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 6572.3,
        "TradesNeverDelinquent": 0.9470724390342133,
        "TotalTrades": 22.0,
        "StatedMonthlyIncome": 2425.4,
        "AvailableBankcardCredit": 5792.36,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.7937322323843725,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.23978491771849486,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 5861.0,
        "CreditScoreRangeLower": 800.0,
        "EmploymentStatusDuration": 26.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 12.0,
        "BorrowerState": 1.0,
        "EmploymentStatus": 4.0,
        "SentimentScore": 0.1048331316501987,
        "Duration": 9.0,
        "BorrowerMaximumRate": 0.1599548465352239,
        "FundingOption": "Close when funded",
        "Images": 2.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 409.0
      },
      "description": "great stable job, paying down debt"
    },
    "response": {
      "request_id": "scenario-07",
      "sentiment_score": 0.5573704017131538,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.11631844705955102,
        "success": 0.81,
        "distance": 0.22277787396046664
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.12570455946831943,
        "success": 0.9443521241774872,
        "distance": 0.1374711691762388
      },
      "chosen": "bidding",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9983071591614108
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-08",
      "features": {
        "OpenCreditLines": 10.0,
        "ProsperGrade": "D",
        "ProsperScore": 6.0,
        "ListingCategory": 11.0,
        "CurrentCreditLines": 16.0,
        "TotalCreditLinespast7years": 28.0,
        "OpenRevolvingAccounts": 5.0,
        "OpenRevolvingMonthlyPayment": 1454.75,
        "TotalInquiries": 5.0,
        "CurrentDelinquencies": 2.0,
        "AmountDelinquent": 676.34,
        "Occupation": 29.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 8450.71,
        "TradesNeverDelinquent": 0.7457534149498071,
        "TotalTrades": 22.0,
        "StatedMonthlyIncome": 1742.68,
        "AvailableBankcardCredit": 7375.94,
        "TradesOpenedLast6Months": 2.0,
        "BankcardUtilization": 0.6905022403909103,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.17312288730333353,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 3608.0,
        "CreditScoreRangeLower": 680.0,
        "EmploymentStatusDuration": 158.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 12.0,
        "BorrowerState": 49.0,
        "EmploymentStatus": 6.0,
        "SentimentScore": -0.0015220751240406782,
        "Duration": 7.0,
        "BorrowerMaximumRate": 0.26973764800470124,
        "FundingOption": "Open for duration",
        "Images": 0.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 77.0
      }
    },
    "response": {
      "request_id": "scenario-08",
      "sentiment_score": -0.0015220751240406782,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2138623857695833,
        "success": 0.81,
        "distance": 0.2860718791616157
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.18760390582245695,
        "success": 0.0018575804934090083,
        "distance": 1.0156197689580058
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.850910256132137
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-09",
      "features": {
        "OpenCreditLines": 6.0,
        "ProsperGrade": "C",
        "ProsperScore": 6.0,
        "ListingCategory": 13.0,
        "CurrentCreditLines": 8.0,
        "TotalCreditLinespast7years": 25.0,
        "OpenRevolvingAccounts": 5.0,
        "OpenRevolvingMonthlyPayment": 792.51,
        "TotalInquiries": 3.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 1183.87,
        "Occupation": 26.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 6470.19,
        "TradesNeverDelinquent": 0.7454534340967954,
        "TotalTrades": 25.0,
        "StatedMonthlyIncome": 9601.01,
        "AvailableBankcardCredit": 8647.52,
        "TradesOpenedLast6Months": 1.0,
        "BankcardUtilization": 0.8332415534688086,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.13948555117652678,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 6683.0,
        "CreditScoreRangeLower": 700.0,
        "EmploymentStatusDuration": 9.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 12.0,
        "BorrowerState": 8.0,
        "EmploymentStatus": 5.0,
        "SentimentScore": 0.7141673341217218,
        "Duration": 1.0,
        "BorrowerMaximumRate": 0.23741598332692682,
        "FundingOption": "Close when funded",
        "Images": 2.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 92.0
      },
      "max_rate": 0.17
    },
    "response": {
      "request_id": "scenario-09",
      "sentiment_score": 0.7141673341217218,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.19710390839814335,
        "success": 0.81,
        "distance": 0.27376988641160604
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.10702372748982385,
        "success": 0.9590735755317406,
        "distance": 0.1145820686912757
      },
      "chosen": "bidding",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9957027668919322
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-10",
      "features": {
        "OpenCreditLines": 8.0,
        "ProsperGrade": "B",
        "ProsperScore": 7.0,
        "ListingCategory": 7.0,
        "CurrentCreditLines": 4.0,
        "TotalCreditLinespast7years": 34.0,
        "OpenRevolvingAccounts": 4.0,
        "OpenRevolvingMonthlyPayment": 130.32,
        "TotalInquiries": 5.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 66.79,
        "Occupation": 3.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 8501.57,
        "TradesNeverDelinquent": 0.8086075132814096,
        "TotalTrades": 34.0,
        "StatedMonthlyIncome": 3196.85,
        "AvailableBankcardCredit": 513.82,
        "TradesOpenedLast6Months": 3.0,
        "BankcardUtilization": 0.22016673618392565,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.17249836149638603,
        "InquiriesLast6Months": 2.0,
        "LoanAmount": 13864.0,
        "CreditScoreRangeLower": 730.0,
        "EmploymentStatusDuration": 71.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 36.0,
        "BorrowerState": 7.0,
        "EmploymentStatus": 2.0,
        "SentimentScore": 0.8735763414064477,
        "Duration": 11.0,
        "BorrowerMaximumRate": 0.20875010708165995,
        "FundingOption": "Close when funded",
        "Images": 6.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 246.0
      },
      "description": "Payoff Credit Cards"
    },
    "response": {
      "request_id": "scenario-10",
      "sentiment_score": 0.38181916792267817,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.16016879265657485,
        "success": 0.81,
        "distance": 0.24850360589147363
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.193815159360257,
        "success": 0.8458076064136355,
        "distance": 0.2476683472665293
      },
      "chosen": "bidding",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9987173434782686
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-11",
      "features": {
        "OpenCreditLines": 10.0,
        "ProsperGrade": "A",
        "ProsperScore": 7.0,
        "ListingCategory": 8.0,
        "CurrentCreditLines": 11.0,
        "TotalCreditLinespast7years": 27.0,
        "OpenRevolvingAccounts": 4.0,
        "OpenRevolvingMonthlyPayment": 200.84,
        "TotalInquiries": 2.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 60.91,
        "Occupation": 9.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 1931.33,
        "TradesNeverDelinquent": 0.8719223135028902,
        "TotalTrades": 21.0,
        "StatedMonthlyIncome": 3328.47,
        "AvailableBankcardCredit": 16844.09,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.6831844884048698,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.05432850905349126,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 13500.0,
        "CreditScoreRangeLower": 770.0,
        "EmploymentStatusDuration": 158.0,
        "DelinquenciesLast7Years": 0.0,
        "Term": 12.0,
        "BorrowerState": 34.0,
        "EmploymentStatus": 1.0,
        "SentimentScore": 0.5466655520281518,
        "Duration": 4.0,
        "BorrowerMaximumRate": 0.15065297265979583,
        "FundingOption": "Close when funded",
        "Images": 0.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 137.0
      }
    },
    "response": {
      "request_id": "scenario-11",
      "sentiment_score": 0.5466655520281518,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.11873524040631359,
        "success": 0.81,
        "distance": 0.2240492296669307
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.11191213614946956,
        "success": 0.6223453578714985,
        "distance": 0.39388749020341324
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9842265000393409
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-12",
      "features": {
        "OpenCreditLines": 12.0,
        "ProsperGrade": "E",
        "ProsperScore": 5.0,
        "ListingCategory": 7.0,
        "CurrentCreditLines": 7.0,
        "TotalCreditLinespast7years": 31.0,
        "OpenRevolvingAccounts": 3.0,
        "OpenRevolvingMonthlyPayment": 221.3,
        "TotalInquiries": 2.0,
        "CurrentDelinquencies": 1.0,
        "AmountDelinquent": 75.32,
        "Occupation": 23.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 26205.31,
        "TradesNeverDelinquent": 0.7091777886707294,
        "TotalTrades": 28.0,
        "StatedMonthlyIncome": 2426.08,
        "AvailableBankcardCredit": 9102.39,
        "TradesOpenedLast6Months": 1.0,
        "BankcardUtilization": 0.33249509589561355,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.17391490399107049,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 3157.0,
        "CreditScoreRangeLower": 600.0,
        "EmploymentStatusDuration": 32.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 36.0,
        "BorrowerState": 47.0,
        "EmploymentStatus": 6.0,
        "SentimentScore": 0.05588282242867301,
        "Duration": 11.0,
        "BorrowerMaximumRate": 0.26130428849534487,
        "FundingOption": "Close when funded",
        "Images": 1.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 354.0
      }
    },
    "response": {
      "request_id": "scenario-12",
      "sentiment_score": 0.05588282242867301,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.27247957069373085,
        "success": 0.81,
        "distance": 0.332182354205397
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.23009641821242593,
        "success": 0.002593347030771948,
        "distance": 1.0236036308364023
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.834243053908319
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-13",
      "features": {
        "OpenCreditLines": 11.0,
        "ProsperGrade": "C",
        "ProsperScore": 7.0,
        "ListingCategory": 14.0,
        "CurrentCreditLines": 9.0,
        "TotalCreditLinespast7years": 25.0,
        "OpenRevolvingAccounts": 9.0,
        "OpenRevolvingMonthlyPayment": 501.63,
        "TotalInquiries": 1.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 15.89,
        "Occupation": 3.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 7320.35,
        "TradesNeverDelinquent": 0.7796035482120561,
        "TotalTrades": 27.0,
        "StatedMonthlyIncome": 3402.44,
        "AvailableBankcardCredit": 4833.48,
        "TradesOpenedLast6Months": 3.0,
        "BankcardUtilization": 0.8297655904583914,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.19442178759171816,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 10586.0,
        "CreditScoreRangeLower": 690.0,
        "EmploymentStatusDuration": 54.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 12.0,
        "BorrowerState": 33.0,
        "EmploymentStatus": 5.0,
        "SentimentScore": -0.3352293336909551,
        "Duration": 9.0,
        "BorrowerMaximumRate": 0.23428329109435037,
        "FundingOption": "Close when funded",
        "Images": 1.0,
        "HasVerifiedBankAccount": "False",
        "DescriptionLength": 141.0
      },
      "description": "help me please",
      "max_rate": 0.13
    },
    "response": {
      "request_id": "scenario-13",
      "sentiment_score": 0.401923825269382,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2108947288853776,
        "success": 0.81,
        "distance": 0.28386015337069925
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.15445925542917965,
        "success": 0.20202502515992166,
        "distance": 0.8127863938691151
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9683421549053958
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-14",
      "features": {
        "OpenCreditLines": 12.0,
        "ProsperGrade": "C",
        "ProsperScore": 7.0,
        "ListingCategory": 11.0,
        "CurrentCreditLines": 13.0,
        "TotalCreditLinespast7years": 22.0,
        "OpenRevolvingAccounts": 6.0,
        "OpenRevolvingMonthlyPayment": 101.48,
        "TotalInquiries": 1.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 1201.08,
        "Occupation": 2.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 11653.02,
        "TradesNeverDelinquent": 0.8307607667749727,
        "TotalTrades": 21.0,
        "StatedMonthlyIncome": 1516.43,
        "AvailableBankcardCredit": 5348.95,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.16267778817763331,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.16008137013538037,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 18990.0,
        "CreditScoreRangeLower": 710.0,
        "EmploymentStatusDuration": 125.0,
        "DelinquenciesLast7Years": 3.0,
        "Term": 36.0,
        "BorrowerState": 40.0,
        "EmploymentStatus": 3.0,
        "SentimentScore": -0.06677808754839071,
        "Duration": 8.0,
        "BorrowerMaximumRate": 0.22412162451929274,
        "FundingOption": "Close when funded",
        "Images": 2.0,
        "HasVerifiedBankAccount": "False",
        "DescriptionLength": 309.0
      }
    },
    "response": {
      "request_id": "scenario-14",
      "sentiment_score": -0.06677808754839071,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.22345811489228382,
        "success": 0.81,
        "distance": 0.2933147270615867
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.2179057172906132,
        "success": 0.00021836809787608165,
        "distance": 1.0232527611088136
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.5305551761276011
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-15",
      "features": {
        "OpenCreditLines": 7.0,
        "ProsperGrade": "E",
        "ProsperScore": 3.0,
        "ListingCategory": 14.0,
        "CurrentCreditLines": 13.0,
        "TotalCreditLinespast7years": 27.0,
        "OpenRevolvingAccounts": 7.0,
        "OpenRevolvingMonthlyPayment": 89.27,
        "TotalInquiries": 3.0,
        "CurrentDelinquencies": 1.0,
        "AmountDelinquent": 8.35,
        "Occupation": 5.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 11114.25,
        "TradesNeverDelinquent": 0.6816181354158454,
        "TotalTrades": 18.0,
        "StatedMonthlyIncome": 8007.81,
        "AvailableBankcardCredit": 1814.63,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.31663949008370124,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.20143761175512567,
        "InquiriesLast6Months": 4.0,
        "LoanAmount": 7257.0,
        "CreditScoreRangeLower": 620.0,
        "EmploymentStatusDuration": 42.0,
        "DelinquenciesLast7Years": 0.0,
        "Term": 12.0,
        "BorrowerState": 3.0,
        "EmploymentStatus": 0.0,
        "SentimentScore": -0.10882106432169941,
        "Duration": 13.0,
        "BorrowerMaximumRate": 0.2582429786172076,
        "FundingOption": "Open for duration",
        "Images": 2.0,
        "HasVerifiedBankAccount": "False",
        "DescriptionLength": 404.0
      }
    },
    "response": {
      "request_id": "scenario-15",
      "sentiment_score": -0.10882106432169941,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2501723159110709,
        "success": 0.81,
        "distance": 0.31414357807905074
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.24949613551154987,
        "success": 0.000154595099228126,
        "distance": 1.0305043208722544
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.528459374246748
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-16",
      "features": {
        "OpenCreditLines": 9.0,
        "ProsperGrade": "D",
        "ProsperScore": 4.0,
        "ListingCategory": 12.0,
        "CurrentCreditLines": 9.0,
        "TotalCreditLinespast7years": 23.0,
        "OpenRevolvingAccounts": 6.0,
        "OpenRevolvingMonthlyPayment": 235.26,
        "TotalInquiries": 4.0,
        "CurrentDelinquencies": 1.0,
        "AmountDelinquent": 0.99,
        "Occupation": 40.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 14992.45,
        "TradesNeverDelinquent": 0.7374817062703349,
        "TotalTrades": 27.0,
        "StatedMonthlyIncome": 2314.51,
        "AvailableBankcardCredit": 17855.71,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.4027327548234057,
        "Homeownership": "Not own",
        "DebtToIncomeRatio": 0.23440829180363335,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 9026.0,
        "CreditScoreRangeLower": 680.0,
        "EmploymentStatusDuration": 103.0,
        "DelinquenciesLast7Years": 2.0,
        "Term": 60.0,
        "BorrowerState": 2.0,
        "EmploymentStatus": 2.0,
        "SentimentScore": 0.5490770338483768,
        "Duration": 4.0,
        "BorrowerMaximumRate": 0.2624981637481913,
        "FundingOption": "Open for duration",
        "Images": 1.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 300.0
      },
      "description": "great stable job, paying down debt"
    },
    "response": {
      "request_id": "scenario-16",
      "sentiment_score": 0.5573704017131538,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2582583129457896,
        "success": 0.81,
        "distance": 0.32062026792703757
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.1755077998297775,
        "success": 0.29291981615931634,
        "distance": 0.7285364604337001
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9350481953906631
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-17",
      "features": {
        "OpenCreditLines": 5.0,
        "ProsperGrade": "AA",
        "ProsperScore": 8.0,
        "ListingCategory": 5.0,
        "CurrentCreditLines": 10.0,
        "TotalCreditLinespast7years": 24.0,
        "OpenRevolvingAccounts": 5.0,
        "OpenRevolvingMonthlyPayment": 496.48,
        "TotalInquiries": 8.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 1584.54,
        "Occupation": 11.0,
        "PublicRecordsLast10Years": 0.0,
        "RevolvingCreditBalance": 13484.02,
        "TradesNeverDelinquent": 0.8185142366685634,
        "TotalTrades": 22.0,
        "StatedMonthlyIncome": 3976.78,
        "AvailableBankcardCredit": 12519.85,
        "TradesOpenedLast6Months": 2.0,
        "BankcardUtilization": 0.3807778789713138,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.08879085474729514,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 2907.0,
        "CreditScoreRangeLower": 820.0,
        "EmploymentStatusDuration": 30.0,
        "DelinquenciesLast7Years": 0.0,
        "Term": 12.0,
        "BorrowerState": 39.0,
        "EmploymentStatus": 5.0,
        "SentimentScore": 0.17456895147944673,
        "Duration": 8.0,
        "BorrowerMaximumRate": 0.2109609952995865,
        "FundingOption": "Open for duration",
        "Images": 1.0,
        "HasVerifiedBankAccount": "False",
        "DescriptionLength": 283.0
      },
      "max_rate": 0.09
    },
    "response": {
      "request_id": "scenario-17",
      "sentiment_score": 0.17456895147944673,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.056507047211309724,
        "success": 0.81,
        "distance": 0.19822473706513313
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.0761381430195277,
        "success": 0.2702520444153768,
        "distance": 0.7337091354906242
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.9964008722964677
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-18",
      "features": {
        "OpenCreditLines": 7.0,
        "ProsperGrade": "HR",
        "ProsperScore": 2.0,
        "ListingCategory": 19.0,
        "CurrentCreditLines": 7.0,
        "TotalCreditLinespast7years": 21.0,
        "OpenRevolvingAccounts": 9.0,
        "OpenRevolvingMonthlyPayment": 1168.96,
        "TotalInquiries": 3.0,
        "CurrentDelinquencies": 2.0,
        "AmountDelinquent": 741.2,
        "Occupation": 14.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 18537.32,
        "TradesNeverDelinquent": 0.7378481616190301,
        "TotalTrades": 30.0,
        "StatedMonthlyIncome": 5413.21,
        "AvailableBankcardCredit": 9294.36,
        "TradesOpenedLast6Months": 1.0,
        "BankcardUtilization": 0.35651547041976983,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.2875844059268066,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 7550.0,
        "CreditScoreRangeLower": 560.0,
        "EmploymentStatusDuration": 116.0,
        "DelinquenciesLast7Years": 1.0,
        "Term": 36.0,
        "BorrowerState": 33.0,
        "EmploymentStatus": 0.0,
        "SentimentScore": 0.6614179146918362,
        "Duration": 1.0,
        "BorrowerMaximumRate": 0.29197874779524624,
        "FundingOption": "Close when funded",
        "Images": 0.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 370.0
      }
    },
    "response": {
      "request_id": "scenario-18",
      "sentiment_score": 0.6614179146918362,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.3002090263214082,
        "success": 0.81,
        "distance": 0.3552822251180714
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.1971844469410194,
        "success": 0.04737947999814737,
        "distance": 0.9728142480679628
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.4287646591589796
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-19",
      "features": {
        "OpenCreditLines": 8.0,
        "ProsperGrade": "E",
        "ProsperScore": 5.0,
        "ListingCategory": 6.0,
        "CurrentCreditLines": 6.0,
        "TotalCreditLinespast7years": 27.0,
        "OpenRevolvingAccounts": 6.0,
        "OpenRevolvingMonthlyPayment": 113.46,
        "TotalInquiries": 4.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 475.3,
        "Occupation": 3.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 16127.78,
        "TradesNeverDelinquent": 0.8614652872762664,
        "TotalTrades": 18.0,
        "StatedMonthlyIncome": 4262.81,
        "AvailableBankcardCredit": 39038.35,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.35131265507267917,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.19237815189478485,
        "InquiriesLast6Months": 0.0,
        "LoanAmount": 5496.0,
        "CreditScoreRangeLower": 610.0,
        "EmploymentStatusDuration": 40.0,
        "DelinquenciesLast7Years": 3.0,
        "Term": 36.0,
        "BorrowerState": 21.0,
        "EmploymentStatus": 2.0,
        "SentimentScore": 0.650189061672535,
        "Duration": 5.0,
        "BorrowerMaximumRate": 0.32771658981116014,
        "FundingOption": "Close when funded",
        "Images": 1.0,
        "HasVerifiedBankAccount": "True",
        "DescriptionLength": 30.0
      },
      "description": "Payoff Credit Cards"
    },
    "response": {
      "request_id": "scenario-19",
      "sentiment_score": 0.38181916792267817,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.2790197074523758,
        "success": 0.81,
        "distance": 0.33756776674737377
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.21184961063863567,
        "success": 0.0053653989828933695,
        "distance": 1.016945547739996
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.4336542952231834
      }
    }
  },
  {
    "request": {
      "request_id": "scenario-20",
      "features": {
        "OpenCreditLines": 12.0,
        "ProsperGrade": "D",
        "ProsperScore": 5.0,
        "ListingCategory": 7.0,
        "CurrentCreditLines": 9.0,
        "TotalCreditLinespast7years": 20.0,
        "OpenRevolvingAccounts": 9.0,
        "OpenRevolvingMonthlyPayment": 166.27,
        "TotalInquiries": 3.0,
        "CurrentDelinquencies": 0.0,
        "AmountDelinquent": 4.12,
        "Occupation": 19.0,
        "PublicRecordsLast10Years": 1.0,
        "RevolvingCreditBalance": 5830.5,
        "TradesNeverDelinquent": 0.8093468132649178,
        "TotalTrades": 17.0,
        "StatedMonthlyIncome": 1710.04,
        "AvailableBankcardCredit": 14316.16,
        "TradesOpenedLast6Months": 0.0,
        "BankcardUtilization": 0.36647329008824203,
        "Homeownership": "Own",
        "DebtToIncomeRatio": 0.16894065873545158,
        "InquiriesLast6Months": 1.0,
        "LoanAmount": 10064.0,
        "CreditScoreRangeLower": 660.0,
        "EmploymentStatusDuration": 81.0,
        "DelinquenciesLast7Years": 3.0,
        "Term": 36.0,
        "BorrowerState": 47.0,
        "EmploymentStatus": 1.0,
        "SentimentScore": -0.1933203494939844,
        "Duration": 10.0,
        "BorrowerMaximumRate": 0.23423616215859994,
        "FundingOption": "Open for duration",
        "Images": 1.0,
        "HasVerifiedBankAccount": "False",
        "DescriptionLength": 237.0
      }
    },
    "response": {
      "request_id": "scenario-20",
      "sentiment_score": -0.1933203494939844,
      "traditional": {
        "loan_type": "traditional",
        "interest": 0.24612047128164563,
        "success": 0.81,
        "distance": 0.3109264967542961
      },
      "bidding": {
        "loan_type": "bidding",
        "interest": 0.21515336969412763,
        "success": 5.930556161355395e-05,
        "distance": 1.0228256766842825
      },
      "chosen": "traditional",
      "tie_broken": false,
      "sentiment_advice": {
        "optimal_sentiment": 1.0,
        "predicted_success": 0.4583766390537041
      }
    }
  }
];

export const WHATIF_SENTIMENT: RecordedWhatif = {
  "request": {
    "request_id": "whatif-sentiment",
    "features": {
      "OpenCreditLines": 8.0,
      "ProsperGrade": "D",
      "ProsperScore": 5.0,
      "ListingCategory": 12.0,
      "CurrentCreditLines": 6.0,
      "TotalCreditLinespast7years": 19.0,
      "OpenRevolvingAccounts": 7.0,
      "OpenRevolvingMonthlyPayment": 914.89,
      "TotalInquiries": 5.0,
      "CurrentDelinquencies": 1.0,
      "AmountDelinquent": 0.7,
      "Occupation": 11.0,
      "PublicRecordsLast10Years": 0.0,
      "RevolvingCreditBalance": 15420.97,
      "TradesNeverDelinquent": 0.7884231322972712,
      "TotalTrades": 21.0,
      "StatedMonthlyIncome": 3200.88,
      "AvailableBankcardCredit": 1893.69,
      "TradesOpenedLast6Months": 1.0,
      "BankcardUtilization": 0.35558640957847704,
      "Homeownership": "Not own",
      "DebtToIncomeRatio": 0.20788625636090105,
      "InquiriesLast6Months": 2.0,
      "LoanAmount": 4549.0,
      "CreditScoreRangeLower": 680.0,
      "EmploymentStatusDuration": 75.0,
      "DelinquenciesLast7Years": 3.0,
      "Term": 36.0,
      "BorrowerState": 17.0,
      "EmploymentStatus": 6.0,
      "SentimentScore": 0.5864361043613661,
      "Duration": 7.0,
      "BorrowerMaximumRate": 0.2274746330854851,
      "FundingOption": "Close when funded",
      "Images": 1.0,
      "HasVerifiedBankAccount": "False",
      "DescriptionLength": 182.0
    },
    "field": "SentimentScore",
    "grid": [
      -1.0,
      -0.9,
      -0.8,
      -0.7,
      -0.6,
      -0.5,
      -0.4,
      -0.3,
      -0.2,
      -0.1,
      0.0,
      0.1,
      0.2,
      0.3,
      0.4,
      0.5,
      0.6,
      0.7,
      0.8,
      0.9,
      1.0
    ]
  },
  "response": {
    "request_id": "whatif-sentiment",
    "field": "SentimentScore",
    "points": [
      {
        "value": -1.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23843403464792082,
          "success": 0.81,
          "distance": 0.3048783181508417
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.18126283659896286,
          "success": 4.6089967299375603e-07,
          "distance": 1.0162948854209435
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.9,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23755052160377596,
          "success": 0.81,
          "distance": 0.30418785365991524
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.18085241419616926,
          "success": 1.0274113225450544e-06,
          "distance": 1.0162212066764762
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.8,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2366670085596311,
          "success": 0.81,
          "distance": 0.30349839034262516
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.18044199179337572,
          "success": 2.2902452584010627e-06,
          "distance": 1.0161470031039255
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.7,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2357834955154862,
          "success": 0.81,
          "distance": 0.30280993503764253
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.18003156939058212,
          "success": 5.10527291931658e-06,
          "distance": 1.0160714322612663
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.6,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23489998247134133,
          "success": 0.81,
          "distance": 0.30212249463592816
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17962114698778853,
          "success": 1.1380318899434076e-05,
          "distance": 1.015992616083858
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.5,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23401646942719648,
          "success": 0.81,
          "distance": 0.3014360760810988
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17921072458499493,
          "success": 2.536801879121085e-05,
          "distance": 1.0159063679356641
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.4,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23313295638305156,
          "success": 0.81,
          "distance": 0.30075068636979335
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17880030218220133,
          "success": 5.654721270685168e-05,
          "distance": 1.0158033553954329
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.3,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2322494433389067,
          "success": 0.81,
          "distance": 0.3000663325520409
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.1783898797794078,
          "success": 0.0001260431394455925,
          "distance": 1.0156627780989582
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.2,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23136593029476185,
          "success": 0.81,
          "distance": 0.29938302173162823
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.1779794573766142,
          "success": 0.00028092483052727976,
          "distance": 1.0154382878864574
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": -0.1,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23048241725061694,
          "success": 0.81,
          "distance": 0.2987007610664684
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.1775690349738206,
          "success": 0.0006260058422930002,
          "distance": 1.015026670772873
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22959890420647208,
          "success": 0.81,
          "distance": 0.2980195577689705
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.177158612571027,
          "success": 0.0013943844786713786,
          "distance": 1.014198377714549
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.1,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22871539116232723,
          "success": 0.81,
          "distance": 0.2973394191064083
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.1767481901682334,
          "success": 0.0031029661172263688,
          "distance": 1.0124443781719654
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.2,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2278318781181823,
          "success": 0.81,
          "distance": 0.2966603524012912
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17633776776543986,
          "success": 0.006890678404871875,
          "distance": 1.0086432139164143
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.3,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22694836507403746,
          "success": 0.81,
          "distance": 0.2959823650317339
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17592734536264626,
          "success": 0.01523131315715084,
          "distance": 1.0003598339760236
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.4,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2260648520298926,
          "success": 0.81,
          "distance": 0.2953054644318273
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17551692295985266,
          "success": 0.033328830631143086,
          "distance": 0.9824761269029635
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.5,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2251813389857477,
          "success": 0.81,
          "distance": 0.2946296580920091
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17510650055705906,
          "success": 0.07137099451445691,
          "distance": 0.9449942414461625
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.6,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22429782594160283,
          "success": 0.81,
          "distance": 0.2939549535594349
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17469607815426547,
          "success": 0.1462651058617385,
          "distance": 0.8714252631131082
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.7,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22341431289745797,
          "success": 0.81,
          "distance": 0.2932813584383488
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17428565575147192,
          "success": 0.27636150667113796,
          "distance": 0.7443306784138257
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.8,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22253079985331306,
          "success": 0.81,
          "distance": 0.2926088803904544
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17387523334867833,
          "success": 0.45984558133469605,
          "distance": 0.5674499033180902
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 0.9,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2216472868091682,
          "success": 0.81,
          "distance": 0.29193752713528565
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17346481094588473,
          "success": 0.6549011693356855,
          "distance": 0.3862424673212006
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 1.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22076377376502335,
          "success": 0.81,
          "distance": 0.2912673064505771
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17305438854309113,
          "success": 0.8088061305412323,
          "distance": 0.2578815951413351
        },
        "chosen": "bidding",
        "tie_broken": false
      }
    ]
  }
};

export const WHATIF_AMOUNT_5PT: RecordedWhatif = {
  "request": {
    "request_id": "whatif-amount",
    "features": {
      "OpenCreditLines": 8.0,
      "ProsperGrade": "D",
      "ProsperScore": 5.0,
      "ListingCategory": 12.0,
      "CurrentCreditLines": 6.0,
      "TotalCreditLinespast7years": 19.0,
      "OpenRevolvingAccounts": 7.0,
      "OpenRevolvingMonthlyPayment": 914.89,
      "TotalInquiries": 5.0,
      "CurrentDelinquencies": 1.0,
      "AmountDelinquent": 0.7,
      "Occupation": 11.0,
      "PublicRecordsLast10Years": 0.0,
      "RevolvingCreditBalance": 15420.97,
      "TradesNeverDelinquent": 0.7884231322972712,
      "TotalTrades": 21.0,
      "StatedMonthlyIncome": 3200.88,
      "AvailableBankcardCredit": 1893.69,
      "TradesOpenedLast6Months": 1.0,
      "BankcardUtilization": 0.35558640957847704,
      "Homeownership": "Not own",
      "DebtToIncomeRatio": 0.20788625636090105,
      "InquiriesLast6Months": 2.0,
      "LoanAmount": 4549.0,
      "CreditScoreRangeLower": 680.0,
      "EmploymentStatusDuration": 75.0,
      "DelinquenciesLast7Years": 3.0,
      "Term": 36.0,
      "BorrowerState": 17.0,
      "EmploymentStatus": 6.0,
      "SentimentScore": 0.5864361043613661,
      "Duration": 7.0,
      "BorrowerMaximumRate": 0.2274746330854851,
      "FundingOption": "Close when funded",
      "Images": 1.0,
      "HasVerifiedBankAccount": "False",
      "DescriptionLength": 182.0
    },
    "field": "LoanAmount",
    "grid": [
      1000.0,
      5000.0,
      10000.0,
      20000.0,
      40000.0
    ]
  },
  "response": {
    "request_id": "whatif-amount",
    "field": "LoanAmount",
    "points": [
      {
        "value": 1000.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.21603799647535413,
          "success": 0.81,
          "distance": 0.28770195675574595
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.16341042607637501,
          "success": 0.1800073668749154,
          "distance": 0.8361165503264913
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 5000.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.22548253663146597,
          "success": 0.81,
          "distance": 0.2948599232275563
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.17619298042327042,
          "success": 0.12805675461498564,
          "distance": 0.8895667425904513
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 10000.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.23728821182660573,
          "success": 0.81,
          "distance": 0.30398305129047587
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.1921711733568897,
          "success": 0.08160835586425902,
          "distance": 0.9382819255893791
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 20000.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.2608995622168854,
          "success": 0.81,
          "distance": 0.32275157871800164
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.22412755922412836,
          "success": 0.03150566506991791,
          "distance": 0.9940897542955702
        },
        "chosen": "traditional",
        "tie_broken": false
      },
      {
        "value": 40000.0,
        "traditional": {
          "loan_type": "traditional",
          "interest": 0.3081222629974446,
          "success": 0.81,
          "distance": 0.3619935482224323
        },
        "bidding": {
          "loan_type": "bidding",
          "interest": 0.2880403309586056,
          "success": 0.004340822157861137,
          "distance": 1.0364865800771503
        },
        "chosen": "traditional",
        "tie_broken": false
      }
    ]
  }
};

export const ERROR_MISSING_FEATURE = {
  "error": "missing required feature: LoanAmount",
  "feature": "LoanAmount"
};

export const ERROR_EXTRA_KEY = {
  "errors": [
    {
      "field": "nonsense",
      "message": "Extra inputs are not permitted"
    }
  ]
};

export const ERROR_UNSEEN_CLASS = {
  "error": "unseen class 'ZZ' in ordinal column 'ProsperGrade'"
};
