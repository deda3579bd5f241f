// Live what-if exploration. Slider input is debounced, a newer request
// aborts the in-flight one, and responses that lose the race are dropped so
// the chart only ever shows the latest server answer.

import { postWhatif } from "./api";
import type { WhatifRequest, WhatifResponse } from "./types";

export interface WhatifCallbacks {
  onResult(resp: WhatifResponse): void;
  onStale(message: string): void;
}

export class WhatifController {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private seq = 0;

  constructor(
    private callbacks: WhatifCallbacks,
    private debounceMs = 150,
  ) {}

  /** Queue a sweep; bursts within the debounce window collapse to one
   * request and cancel whatever is still in flight. */
  explore(req: WhatifRequest): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    if (this.inflight !== null) {
      this.inflight.abort();
      this.inflight = null;
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.send(req);
    }, this.debounceMs);
  }

  private async send(req: WhatifRequest): Promise<void> {
    const controller = new AbortController();
    this.inflight = controller;
    const ticket = ++this.seq;
    try {
      const resp = await postWhatif(req, controller.signal);
      if (ticket === this.seq) {
        this.callbacks.onResult(resp);
      }
    } catch {
      if (!controller.signal.aborted && ticket === this.seq) {
        this.callbacks.onStale("What-if request failed; showing the last results.");
      }
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }

  dispose(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.inflight !== null) {
      this.inflight.abort();
      this.inflight = null;
    }
  }
}
