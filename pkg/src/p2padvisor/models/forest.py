"""Random forest built on exhaustive-threshold CART trees.

Trees grow level-synchronously: rows stay grouped by node, so per-node
reductions are reduceat calls and the split search for one feature is a
single segmented prefix scan across every node of the level that
sampled it. When a node's sampled feature subset yields no usable split
the search widens to the remaining features before the node becomes a
leaf, so trees can always reach purity on unique rows.
"""

from __future__ import annotations

import math

import numpy as np

from .base import ModelSpec, Standardizer, TrainedModel

N_TREES = 100
MIN_LEAF = 1


def _split_costs(SY, counts_left, total, task):
    """Cost (impurity sum) of every cut position, vectorized per column."""
    n = SY.shape[0]
    cy = np.cumsum(SY, axis=0)[:-1]            # left sums at cuts 1..n-1
    nl = counts_left[:, None]
    nr = n - nl
    if task == "regression":
        cy2 = np.cumsum(SY * SY, axis=0)
        t2 = cy2[-1]
        left = cy2[:-1] - cy * cy / nl
        right = (t2 - cy2[:-1]) - (total - cy) ** 2 / nr
    else:
        ones_l = cy
        ones_r = total - cy
        left = nl - (ones_l**2 + (nl - ones_l) ** 2) / nl
        right = nr - (ones_r**2 + (nr - ones_r) ** 2) / nr
    return left + right


def _node_cost(y, task):
    n = y.size
    if task == "regression":
        return float(np.sum((y - y.mean()) ** 2))
    ones = float(y.sum())
    return n - (ones**2 + (n - ones) ** 2) / n


def _best_split(X, y, candidates, task):
    """Best (gain, feature, threshold) over the candidate features, or None.

    Per-node reference implementation; the level-wise builder below uses
    it only for the rare widened search, and tests hold the two routes
    against each other.
    """
    V = X[:, candidates]
    n = V.shape[0]
    order = np.argsort(V, axis=0, kind="stable")
    SV = np.take_along_axis(V, order, axis=0)
    SY = y[order]
    valid = SV[1:] > SV[:-1]
    if not valid.any():
        return None
    counts_left = np.arange(1, n)
    costs = _split_costs(SY, counts_left, y.sum(), task)
    parent = _node_cost(y, task)
    gains = np.where(valid, parent - costs, -np.inf)
    # ties go to the lowest feature index, then the lowest cut position
    cut_per_col = np.argmax(gains, axis=0)
    gain_per_col = gains[cut_per_col, np.arange(gains.shape[1])]
    col = int(np.argmax(gain_per_col))
    cut = int(cut_per_col[col])
    gain = gains[cut, col]
    if not gain > 0.0:
        return None
    threshold = 0.5 * (SV[cut, col] + SV[cut + 1, col])
    return float(gain), int(candidates[col]), float(threshold)


def _leaf_value(mean, task):
    if task == "classification":
        # vote ties go to non-funded
        return np.where(mean > 0.5, 1.0, 0.0)
    return mean


def _boundaries(keys: np.ndarray) -> np.ndarray:
    """Start index of every run of equal consecutive keys."""
    mark = np.empty(keys.size, dtype=bool)
    mark[0] = True
    np.not_equal(keys[1:], keys[:-1], out=mark[1:])
    return np.flatnonzero(mark)


def _grow_tree(X, y, rng, m_try, min_leaf, max_depth, task, importances):
    """Grow one tree; returns flat node arrays (feature -1 marks a leaf).

    Node ids are allocated level by level: the children of a level's
    split nodes form one contiguous block, so every per-node record
    update is an array assignment into the current level's block.
    """
    n_root, p = X.shape
    blocks = []  # one record-array dict per level
    next_id = 1

    rows = np.arange(n_root)
    starts = np.array([0])
    depth = 0
    while rows.size:
        L = starts.size
        block = {
            "feature": np.full(L, -1, dtype=np.int64),
            "threshold": np.zeros(L),
            "left": np.full(L, -1, dtype=np.int64),
            "right": np.full(L, -1, dtype=np.int64),
            "value": np.zeros(L),
        }
        blocks.append(block)

        y_rows = y[rows]
        ends = np.empty(L, dtype=np.int64)
        ends[:-1] = starts[1:]
        ends[-1] = rows.size
        seg_len = ends - starts
        mean = np.add.reduceat(y_rows, starts) / seg_len
        pure = np.maximum.reduceat(y_rows, starts) == np.minimum.reduceat(y_rows, starts)
        depth_cap = max_depth is not None and depth >= max_depth
        is_leaf = (seg_len < 2 * min_leaf) | pure | depth_cap
        block["value"][is_leaf] = _leaf_value(mean[is_leaf], task)

        keep = ~is_leaf
        if not keep.any():
            break
        kept = np.flatnonzero(keep)  # block slot per live segment
        rows = rows[np.repeat(keep, seg_len)]
        seg_len = seg_len[keep]
        starts = np.zeros(seg_len.size, dtype=np.int64)
        np.cumsum(seg_len[:-1], out=starts[1:])
        y_rows = y[rows]
        L = seg_len.size

        sum_y = np.add.reduceat(y_rows, starts)
        mean = sum_y / seg_len
        if task == "regression":
            sum_y2 = np.add.reduceat(y_rows * y_rows, starts)
            parent_cost = sum_y2 - sum_y * sum_y / seg_len
        else:
            parent_cost = seg_len - (sum_y**2 + (seg_len - sum_y) ** 2) / seg_len

        # one flat scan over all (segment, candidate-feature) pairs:
        # pair q = segment q // m_eff, feature cand[q // m_eff, q % m_eff]
        if m_try < p:
            cand = np.sort(np.argsort(rng.random((L, p)), axis=1)[:, :m_try], axis=1)
        else:
            cand = np.tile(np.arange(p), (L, 1))
        m_eff = cand.shape[1]

        pair_len = np.repeat(seg_len, m_eff)
        pair_starts = np.zeros(L * m_eff, dtype=np.int64)
        np.cumsum(pair_len[:-1], out=pair_starts[1:])
        N = rows.size * m_eff
        within = np.arange(N) - np.repeat(pair_starts, pair_len)
        row_pos = np.repeat(np.repeat(starts, m_eff), pair_len) + within
        feats = np.repeat(cand.ravel(), pair_len)
        v = X[rows[row_pos], feats]
        yv = y_rows[row_pos]
        order = np.lexsort((v, np.repeat(np.arange(L * m_eff), pair_len)))
        v, yv = v[order], yv[order]

        left_cnt = within + 1.0
        right_cnt = np.repeat(pair_len, pair_len) - left_cnt
        valid = np.empty(N, dtype=bool)
        np.greater(v[1:], v[:-1], out=valid[:-1])
        valid[-1] = False
        valid[pair_starts + pair_len - 1] = False
        if min_leaf > 1:
            valid &= (left_cnt >= min_leaf) & (right_cnt >= min_leaf)

        cs = np.cumsum(yv)
        offs = np.empty(L * m_eff)
        offs[0] = 0.0
        offs[1:] = cs[pair_starts[1:] - 1]
        lsum = cs - np.repeat(offs, pair_len)
        tsum = np.repeat(np.repeat(sum_y, m_eff), pair_len)
        with np.errstate(divide="ignore", invalid="ignore"):
            if task == "regression":
                cs2 = np.cumsum(yv * yv)
                offs2 = np.empty(L * m_eff)
                offs2[0] = 0.0
                offs2[1:] = cs2[pair_starts[1:] - 1]
                l2 = cs2 - np.repeat(offs2, pair_len)
                t2 = np.repeat(np.repeat(sum_y2, m_eff), pair_len)
                cost = (l2 - lsum * lsum / left_cnt) + (
                    (t2 - l2) - (tsum - lsum) ** 2 / right_cnt
                )
            else:
                ones_l = lsum
                ones_r = tsum - lsum
                cost = (
                    left_cnt - (ones_l**2 + (left_cnt - ones_l) ** 2) / left_cnt
                ) + (right_cnt - (ones_r**2 + (right_cnt - ones_r) ** 2) / right_cnt)
        cost = np.where(valid, cost, np.inf)

        cmin = np.minimum.reduceat(cost, pair_starts).reshape(L, m_eff)
        hit = cost == np.repeat(cmin.ravel(), pair_len)
        first_pos = np.minimum.reduceat(np.where(hit, np.arange(N), N), pair_starts)
        # candidates are sorted, so argmin ties pick the lowest feature;
        # first_pos ties pick the lowest cut position
        jb = np.argmin(cmin, axis=1)
        idxL = np.arange(L)
        best_cost = cmin[idxL, jb]
        best_feat = cand[idxL, jb]
        fp = np.where(
            np.isfinite(best_cost), first_pos.reshape(L, m_eff)[idxL, jb], 0
        )
        best_thr = 0.5 * (v[fp] + v[np.minimum(fp + 1, N - 1)])

        gain = parent_cost - best_cost
        no_split = ~np.isfinite(best_cost) | (gain <= 0.0)
        if m_try < p:
            # none of the sampled features cut this node: widen the search
            for s in np.flatnonzero(no_split):
                idx = rows[starts[s]: starts[s] + seg_len[s]]
                rest = np.setdiff1d(np.arange(p), cand[s])
                found = _best_split(X[idx], y[idx], rest, task) if rest.size else None
                if found is None:
                    continue
                gain_s, feat_s, thr_s = found
                n_left = int(np.count_nonzero(X[idx, feat_s] <= thr_s))
                if n_left < min_leaf or idx.size - n_left < min_leaf:
                    continue
                best_cost[s] = parent_cost[s] - gain_s
                best_feat[s] = feat_s
                best_thr[s] = thr_s
                no_split[s] = False

        block["value"][kept[no_split]] = _leaf_value(mean[no_split], task)
        split = ~no_split
        n_split = int(np.count_nonzero(split))
        if n_split == 0:
            break
        np.add.at(
            importances, best_feat[split], (parent_cost - best_cost)[split] / n_root
        )
        slots = kept[split]
        block["feature"][slots] = best_feat[split]
        block["threshold"][slots] = best_thr[split]
        # children get the next contiguous id block, left/right interleaved
        # in ascending segment order, matching the child_key sort below
        child_ids = next_id + np.arange(2 * n_split, dtype=np.int64)
        next_id += 2 * n_split
        block["left"][slots] = child_ids[0::2]
        block["right"][slots] = child_ids[1::2]

        child_slot = np.full(L, -1, dtype=np.int64)
        child_slot[split] = np.arange(n_split)
        seg_of_row = np.repeat(np.arange(L), seg_len)
        in_split = split[seg_of_row]
        r_sp = rows[in_split]
        g_sp = seg_of_row[in_split]
        go_left = X[r_sp, best_feat[g_sp]] <= best_thr[g_sp]
        child_key = 2 * child_slot[g_sp] + (~go_left)
        order = np.argsort(child_key, kind="stable")
        rows = r_sp[order]
        starts = _boundaries(child_key[order])
        depth += 1

    return {
        name: np.concatenate([b[name] for b in blocks])
        for name in ("feature", "threshold", "left", "right", "value")
    }


def tree_predict(tree: dict, X: np.ndarray) -> np.ndarray:
    """Route every row to its leaf; one vectorized step per tree level."""
    feature = tree["feature"]
    cur = np.zeros(X.shape[0], dtype=np.int64)
    active = np.flatnonzero(feature[cur] >= 0)
    while active.size:
        nd = cur[active]
        go_left = X[active, feature[nd]] <= tree["threshold"][nd]
        cur[active] = np.where(go_left, tree["left"][nd], tree["right"][nd])
        active = active[feature[cur[active]] >= 0]
    return tree["value"][cur]


class ForestModel(TrainedModel):
    def __init__(self, spec, feature_names, standardizer, trees, importances):
        super().__init__(spec, feature_names, standardizer)
        self.trees = trees
        self.importances = np.asarray(importances, dtype=float)

    def _predict_core(self, X):
        votes = np.zeros(X.shape[0])
        for tree in self.trees:
            votes += tree_predict(tree, X)
        return votes / len(self.trees)

    def params_to_dict(self):
        return {
            "trees": [{k: v.tolist() for k, v in tree.items()} for tree in self.trees],
            "importances": self.importances.tolist(),
        }


def default_m_try(p: int, task: str) -> int:
    if task == "classification":
        return max(1, int(math.sqrt(p)))
    return max(1, p // 3)


def fit_forest(spec: ModelSpec, feature_names, standardizer: Standardizer, X, y) -> ForestModel:
    n, p = X.shape
    n_trees = int(spec.param("n_trees", N_TREES))
    min_leaf = int(spec.param("min_leaf", MIN_LEAF))
    max_depth = spec.param("max_depth", None)
    bootstrap = bool(spec.param("bootstrap", True))
    m_try = int(spec.param("m_try", default_m_try(p, spec.task)))
    m_try = min(max(m_try, 1), p)

    trees = []
    importances = np.zeros(p)
    for t in range(n_trees):
        rng = np.random.default_rng([spec.seed, 1000 + t])
        idx = rng.integers(0, n, size=n) if bootstrap else np.arange(n)
        tree_imp = np.zeros(p)
        tree = _grow_tree(
            X[idx], y[idx], rng, m_try, min_leaf, max_depth, spec.task, tree_imp
        )
        trees.append(tree)
        importances += tree_imp
    importances /= n_trees
    return ForestModel(spec, feature_names, standardizer, trees, importances)
