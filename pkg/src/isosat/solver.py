"""CDCL solver with per-clause derivation metadata.

Two-watched-literal propagation, 1UIP learning with recursive minimization,
VSIDS with phase saving, Luby restarts and a three-tier learned clause
database.  Every place where one clause is derived from others folds the
antecedents' metadata, so that learned clauses can seed E-clauses.

Internally a literal is coded as ``2 * var + (1 if negative else 0)``.
"""
from __future__ import annotations

import heapq
import math
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .eclauses import (DynSymSource, GlidingSource, MetadataError, Permutation,
                       PythagoreanSource, fold_metas)
from .formula import EvalResult, Formula, evaluate
from .meta import CORE, LOCAL, TIER2, ClauseMeta, tier_for_lbd

TRUE, FALSE, UNDEF = 1, -1, 0

SAT, UNSAT, TIMEOUT = "SAT", "UNSAT", "TIMEOUT"

PLUGINS = ("gliding", "pythagorean", "dyn-sym")


def luby(i: int) -> int:
    """i-th element (1-based) of 1, 1, 2, 1, 1, 2, 4, ..."""
    if i < 1:
        raise ValueError("Luby index starts at 1")
    while True:
        k = i.bit_length()
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1


def restart_schedule(restart_count: int, base: int) -> int:
    """Conflicts allotted to run number ``restart_count`` (1-based)."""
    return luby(restart_count) * base


def restart_points(conflicts: int, base: int) -> list[int]:
    """Conflict counts at which restarts fire, up to ``conflicts``."""
    out, at, k = [], 0, 1
    while True:
        at += restart_schedule(k, base)
        if at > conflicts:
            return out
        out.append(at)
        k += 1


def reduce_points(conflicts: int, first: int, inc: int) -> list[int]:
    out, at, k = [], 0, 0
    while True:
        at += first + k * inc
        if at > conflicts:
            return out
        out.append(at)
        k += 1


@dataclass
class SolverConfig:
    restart_base: int = 100
    deletion_ratio: float = 0.8
    eclause_initial_activity: float = 0.8
    filter_x: Optional[int] = 3          # F1
    lbd_cap: Optional[int] = None        # F2
    size_cap: Optional[int] = 20         # F3
    total_cap: Optional[int] = None      # F4: E-clauses added over the run
    examine_cap: Optional[int] = None    # F5: candidates examined per learned clause
    filtering: bool = True
    plugins: tuple = ()
    generators_file: Optional[str] = None
    nonsym_file: Optional[str] = None
    seed: int = 0
    random_freq: float = 0.0
    var_decay: float = 0.95
    clause_decay: float = 0.999
    reduce_first: int = 2000
    reduce_inc: int = 300
    tier2_idle: int = 5000
    binary_minimization: bool = False
    debug_fold: bool = False
    track_cores: bool = False
    record_eclauses: bool = False

    def __post_init__(self):
        self.plugins = tuple(self.plugins)
        if not 0 < self.deletion_ratio <= 1:
            raise ValueError("deletion_ratio must lie in (0, 1]")
        for name in ("filter_x", "lbd_cap", "size_cap", "total_cap", "examine_cap"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.restart_base < 1:
            raise ValueError("restart_base must be positive")
        for p in self.plugins:
            if p not in PLUGINS:
                raise ValueError(f"unknown plugin {p!r}")
        if "gliding" in self.plugins and "pythagorean" in self.plugins:
            raise ValueError("at most one metadata plugin may be active")


@dataclass
class SolveReport:
    outcome: str
    model: Optional[list[int]] = None
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    reductions: int = 0
    learned: int = 0
    eclauses_generated: int = 0
    eclauses_filtered: int = 0
    eclauses_added: int = 0
    eclauses_live: int = 0
    e_derived: int = 0
    e_derived_live: int = 0
    conflict_clauses: int = 0
    conflict_clauses_live: int = 0
    level0_tainted: int = 0
    eclause_overhead_time: float = 0.0
    total_time: float = 0.0
    restart_points: list = field(default_factory=list)
    reduce_points: list = field(default_factory=list)

    @property
    def active_e(self) -> Optional[float]:
        total = self.eclauses_added + self.e_derived
        return (self.eclauses_live + self.e_derived_live) / total if total else None

    @property
    def active_c(self) -> Optional[float]:
        return self.conflict_clauses_live / self.conflict_clauses if self.conflict_clauses else None

    def counters(self) -> dict:
        """Everything except wall-clock timings."""
        d = asdict(self)
        del d["eclause_overhead_time"], d["total_time"]
        return d

    def to_dict(self) -> dict:
        d = asdict(self)
        d["active_e"] = self.active_e
        d["active_c"] = self.active_c
        return d


class _Clause:
    __slots__ = ("lits", "meta", "learnt", "deleted", "touched", "cid", "core", "eclause")

    def __init__(self, lits, meta, learnt, cid, core=None):
        self.lits = lits
        self.meta = meta
        self.learnt = learnt
        self.deleted = False
        self.touched = 0
        self.cid = cid
        self.core = core
        self.eclause = False

    def __repr__(self):
        return f"_Clause({[to_dimacs(c) for c in self.lits]})"


def to_code(lit: int) -> int:
    return (lit << 1) if lit > 0 else ((-lit << 1) | 1)


def to_dimacs(code: int) -> int:
    return -(code >> 1) if code & 1 else code >> 1


class Solver:
    def __init__(self, formula: Formula, cfg: Optional[SolverConfig] = None,
                 generators: Optional[Sequence[Permutation]] = None):
        self.formula = formula
        self.cfg = cfg = cfg or SolverConfig()
        n = self.num_vars = formula.num_vars
        self.value = [UNDEF] * (2 * n + 2)
        self.level = [0] * (n + 1)
        self.reason: list = [None] * (n + 1)
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.activity = [0.0] * (n + 1)
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.phase = [False] * (n + 1)
        self.seen = [0] * (n + 1)
        self.heap = [(0.0, v) for v in range(1, n + 1)]
        self.watches: list[list[_Clause]] = [[] for _ in range(2 * n + 2)]
        self.originals: list[_Clause] = []
        self.learnts: list[_Clause] = []
        self.keys: dict[tuple, int] = {}
        self.level0_meta: list[Optional[ClauseMeta]] = [None] * (n + 1)
        self.level0_core: list = [None] * (n + 1)
        self.rng = random.Random(cfg.seed)
        self.sources = self._build_sources(generators)
        self.pending: list = []
        self.pending_keys: set = set()
        self.eclause_log: list = []
        self.derivations: list = []
        self.ok = True
        self._next_cid = 0

        self.conflicts = self.decisions = self.propagations = 0
        self.restarts = self.reductions = 0
        self.learned_count = 0
        self.e_generated = self.e_filtered = self.e_added = 0
        self.e_derived = self.c_learned = 0
        self.overhead = 0.0
        self.restart_log: list[int] = []
        self.reduce_log: list[int] = []

        for idx, (clause, meta) in enumerate(zip(formula.clauses, formula.meta)):
            meta = meta.derivation() if meta is not None else ClauseMeta()
            core = frozenset((idx,)) if cfg.track_cores else None
            self._add_original([to_code(l) for l in clause], meta, core)

    # -- setup ---------------------------------------------------------------

    def _build_sources(self, generators):
        sources = []
        for p in self.cfg.plugins:
            if p == "gliding":
                sources.append(GlidingSource())
            elif p == "pythagorean":
                sources.append(PythagoreanSource(self.num_vars))
            elif p == "dyn-sym":
                if generators is None:
                    raise ValueError("dyn-sym plugin needs generators")
                sources.append(DynSymSource(generators))
        return sources

    def _new_clause(self, lits, meta, learnt, core=None):
        c = _Clause(lits, meta, learnt, self._next_cid, core)
        self._next_cid += 1
        return c

    def _add_key(self, lits):
        key = tuple(sorted(lits))
        self.keys[key] = self.keys.get(key, 0) + 1

    def _drop_key(self, lits):
        key = tuple(sorted(lits))
        left = self.keys[key] - 1
        if left:
            self.keys[key] = left
        else:
            del self.keys[key]

    def _add_original(self, lits, meta, core):
        c = self._new_clause(lits, meta, False, core)
        self.originals.append(c)
        self._add_key(lits)
        if not lits:
            self.ok = False
        elif len(lits) == 1:
            v = self.value[lits[0]]
            if v == FALSE:
                self.ok = False
            elif v == UNDEF:
                self._enqueue(lits[0], c)
        else:
            self.watches[lits[0]].append(c)
            self.watches[lits[1]].append(c)

    def add_clause(self, lits: Sequence[int], meta: Optional[ClauseMeta] = None,
                   learnt: bool = True) -> bool:
        """Attach a clause at decision level 0.  Returns False if the formula
        became unsatisfiable at the root."""
        assert not self.trail_lim, "clauses are attached at level 0 only"
        meta = meta or ClauseMeta(tier=LOCAL)
        c = self._new_clause([to_code(l) for l in lits], meta, learnt)
        return self._attach_root(c)

    def _attach_root(self, c: _Clause) -> bool:
        value = self.value
        rank = {TRUE: 0, UNDEF: 1, FALSE: 2}
        c.lits.sort(key=lambda code: rank[value[code]])
        lits = c.lits
        self._add_key(lits)
        if c.learnt:
            self.learnts.append(c)
        else:
            self.originals.append(c)
        if not lits or value[lits[0]] == FALSE:
            self.ok = False
            return False
        if len(lits) >= 2:
            self.watches[lits[0]].append(c)
            self.watches[lits[1]].append(c)
        if value[lits[0]] == UNDEF and (len(lits) == 1 or value[lits[1]] == FALSE):
            self._enqueue(lits[0], c)
        return True

    # -- assignment ----------------------------------------------------------

    def _enqueue(self, code, reason):
        v = code >> 1
        self.value[code] = TRUE
        self.value[code ^ 1] = FALSE
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(code)
        if not self.trail_lim and reason is not None:
            self._set_level0_meta(v, reason)

    def _set_level0_meta(self, v, reason):
        others = [l >> 1 for l in reason.lits if l >> 1 != v]
        metas = [reason.meta] + [self.level0_meta[u] for u in others]
        self.level0_meta[v] = fold_metas(metas, self.sources)
        if self.cfg.track_cores:
            core = set(reason.core or ())
            for u in others:
                core |= self.level0_core[u]
            self.level0_core[v] = frozenset(core)

    @property
    def tainted_level0(self) -> set[int]:
        """Variables fixed at level 0 by reasoning that touched non-symmetric clauses."""
        return {v for v, m in enumerate(self.level0_meta)
                if m is not None and not m.symmetric}

    def _cancel_until(self, lvl):
        if len(self.trail_lim) <= lvl:
            return
        value, phase, reason, heap, act = self.value, self.phase, self.reason, self.heap, self.activity
        stop = self.trail_lim[lvl]
        for i in range(len(self.trail) - 1, stop - 1, -1):
            code = self.trail[i]
            v = code >> 1
            value[code] = UNDEF
            value[code ^ 1] = UNDEF
            reason[v] = None
            phase[v] = not (code & 1)
            heapq.heappush(heap, (-act[v], v))
        del self.trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    # -- propagation ---------------------------------------------------------

    def propagate(self) -> Optional[_Clause]:
        value, watches, trail = self.value, self.watches, self.trail
        confl = None
        props = 0
        while self.qhead < len(trail):
            false_lit = trail[self.qhead] ^ 1
            self.qhead += 1
            ws = watches[false_lit]
            i = j = 0
            end = len(ws)
            while i < end:
                c = ws[i]
                i += 1
                if c.deleted:
                    continue
                lits = c.lits
                if lits[0] == false_lit:
                    lits[0] = lits[1]
                    lits[1] = false_lit
                first = lits[0]
                if value[first] == TRUE:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(lits)):
                    lk = lits[k]
                    if value[lk] != FALSE:
                        lits[1] = lk
                        lits[k] = false_lit
                        watches[lk].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if value[first] == FALSE:
                        confl = c
                        while i < end:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                    else:
                        self._enqueue(first, c)
                        props += 1
            del ws[j:]
            if confl is not None:
                self.qhead = len(trail)
                break
        self.propagations += props
        return confl

    # -- heuristics ----------------------------------------------------------

    def _bump_var(self, v):
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for u in range(1, self.num_vars + 1):
                act[u] *= 1e-100
            self.var_inc *= 1e-100
            self._rebuild_heap()
        elif self.value[v << 1] == UNDEF:
            heapq.heappush(self.heap, (-act[v], v))

    def _rebuild_heap(self):
        act, value = self.activity, self.value
        self.heap = [(-act[v], v) for v in range(1, self.num_vars + 1) if value[v << 1] == UNDEF]
        heapq.heapify(self.heap)

    def _bump_clause(self, c):
        c.meta.activity += self.cla_inc
        if c.meta.activity > 1e20:
            for d in self.learnts:
                d.meta.activity *= 1e-20
            self.cla_inc *= 1e-20

    def _pick_branch(self) -> int:
        value = self.value
        if self.cfg.random_freq and self.rng.random() < self.cfg.random_freq:
            free = [v for v in range(1, self.num_vars + 1) if value[v << 1] == UNDEF]
            if free:
                v = self.rng.choice(free)
                return (v << 1) | (0 if self.phase[v] else 1)
        heap, act = self.heap, self.activity
        if len(heap) > 8 * self.num_vars + 1024:
            self._rebuild_heap()
            heap = self.heap
        while heap:
            negact, v = heapq.heappop(heap)
            if value[v << 1] == UNDEF and -negact == act[v]:
                return (v << 1) | (0 if self.phase[v] else 1)
        # stale entries exhausted; fall back to a scan
        for v in range(1, self.num_vars + 1):
            if value[v << 1] == UNDEF:
                return (v << 1) | (0 if self.phase[v] else 1)
        return -1

    # -- conflict analysis ---------------------------------------------------

    def _update_lbd(self, c):
        if len(c.lits) <= 2 or c.meta.tier == CORE:
            c.touched = self.conflicts
            return
        level = self.level
        lbd = len({level[l >> 1] for l in c.lits})
        if lbd < c.meta.lbd:
            c.meta.lbd = lbd
            new_tier = tier_for_lbd(lbd)
            if new_tier == CORE or (new_tier == TIER2 and c.meta.tier == LOCAL):
                c.meta.tier = new_tier
        c.touched = self.conflicts

    def analyze(self, confl: _Clause):
        """Returns (learnt codes, backjump level, folded meta, core)."""
        seen, level, reason, trail = self.seen, self.level, self.reason, self.trail
        dl = len(self.trail_lim)
        learnt = [0]
        consulted = []
        l0: set[int] = set()
        path = 0
        p = -1
        idx = len(trail) - 1
        c = confl
        while True:
            consulted.append(c)
            if c.learnt:
                self._bump_clause(c)
                self._update_lbd(c)
            lits = c.lits
            for q in (lits if p == -1 else lits[1:]):
                v = q >> 1
                if seen[v]:
                    continue
                lv = level[v]
                if lv == 0:
                    l0.add(v)
                    continue
                seen[v] = 1
                self._bump_var(v)
                if lv >= dl:
                    path += 1
                else:
                    learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            v = p >> 1
            c = reason[v]
            seen[v] = 0
            path -= 1
            if path == 0:
                break
        learnt[0] = p ^ 1

        # recursive minimization
        toclear = list(learnt)
        abstract = 0
        for q in learnt[1:]:
            abstract |= 1 << (level[q >> 1] & 31)
        kept = [learnt[0]]
        for q in learnt[1:]:
            if reason[q >> 1] is None or not self._redundant(q, abstract, toclear, consulted, l0):
                kept.append(q)
        learnt = kept

        if self.cfg.binary_minimization and len(learnt) > 2:
            learnt = self._binary_minimize(learnt, consulted)

        for q in toclear:
            seen[q >> 1] = 0

        if len(learnt) == 1:
            bt = 0
        else:
            best = 1
            for i in range(2, len(learnt)):
                if level[learnt[i] >> 1] > level[learnt[best] >> 1]:
                    best = i
            learnt[1], learnt[best] = learnt[best], learnt[1]
            bt = level[learnt[1] >> 1]

        metas = [k.meta for k in consulted] + [self.level0_meta[v] for v in l0]
        if self.cfg.debug_fold:
            assert all(m is not None for m in metas), "level-0 variable without metadata"
            assert len(metas) == len(consulted) + len(l0)
        meta = fold_metas(metas, self.sources)
        core = None
        if self.cfg.track_cores:
            s = set()
            for k in consulted:
                s |= k.core
            for v in l0:
                s |= self.level0_core[v]
            core = frozenset(s)
        return learnt, bt, meta, core

    def _redundant(self, p, abstract, toclear, consulted, l0) -> bool:
        seen, level, reason = self.seen, self.level, self.reason
        stack = [p]
        top = len(toclear)
        while stack:
            q = stack.pop()
            c = reason[q >> 1]
            consulted.append(c)
            for l in c.lits[1:]:
                v = l >> 1
                if seen[v]:
                    continue
                if level[v] == 0:
                    l0.add(v)
                    continue
                if reason[v] is not None and (1 << (level[v] & 31)) & abstract:
                    seen[v] = 1
                    stack.append(l)
                    toclear.append(l)
                else:
                    for k in toclear[top:]:
                        seen[k >> 1] = 0
                    del toclear[top:]
                    return False
        return True

    def _binary_minimize(self, learnt, consulted):
        """Drop literals resolvable away with a binary clause on learnt[0]."""
        asserting = learnt[0]
        present = set(learnt[1:])
        removed = set()
        for c in self.watches[asserting]:
            if c.deleted or len(c.lits) != 2:
                continue
            other = c.lits[0] if c.lits[1] == asserting else c.lits[1]
            neg = other ^ 1
            if neg in present and neg not in removed and self.value[other] == TRUE:
                removed.add(neg)
                consulted.append(c)
        if not removed:
            return learnt
        return [learnt[0]] + [q for q in learnt[1:] if q not in removed]

    # -- E-clauses -----------------------------------------------------------

    def _passes_filters(self, codes) -> bool:
        cfg = self.cfg
        if not cfg.filtering:
            return True
        if cfg.size_cap is not None and len(codes) > cfg.size_cap:
            return False
        if cfg.total_cap is not None and self.e_added + len(self.pending) >= cfg.total_cap:
            return False
        value, level = self.value, self.level
        if cfg.filter_x is not None:
            free = 0
            for code in codes:
                if value[code] != FALSE:
                    free += 1
            if free > cfg.filter_x:
                return False
        if cfg.lbd_cap is not None:
            lbd = len({level[code >> 1] for code in codes if value[code] != UNDEF})
            if lbd > cfg.lbd_cap:
                return False
        return True

    def _emit(self, learnt, meta, core):
        t0 = time.perf_counter()
        cfg = self.cfg
        clause = [to_dimacs(c) for c in learnt]
        if cfg.track_cores:
            self.derivations.append((tuple(clause), meta, core))
        examined = 0
        n = self.num_vars
        for src in self.sources:
            for cand, cmeta in src.emit(clause, meta):
                if cfg.filtering and cfg.examine_cap is not None and examined >= cfg.examine_cap:
                    break
                examined += 1
                self.e_generated += 1
                cmeta.symmetric = True
                cmeta.is_e = True
                cmeta.tier = LOCAL
                if cand is None:
                    self.e_filtered += 1
                    continue
                if any(abs(l) > n for l in cand):
                    raise MetadataError(f"E-clause {cand} from {clause} leaves 1..{n}")
                codes = [to_code(l) for l in cand]
                key = tuple(sorted(codes))
                ok = key not in self.keys and key not in self.pending_keys \
                    and self._passes_filters(codes)
                if cfg.record_eclauses:
                    self.eclause_log.append((cand, ok, tuple(clause), core))
                if not ok:
                    self.e_filtered += 1
                    continue
                self.pending.append((codes, cmeta, core))
                self.pending_keys.add(key)
        self.overhead += time.perf_counter() - t0

    def install_pending(self) -> bool:
        """Move queued E-clauses into the Local tier; call at a restart point,
        before backtracking.  Returns False if the root became conflicting."""
        t0 = time.perf_counter()
        accepted = []
        for codes, meta, core in self.pending:
            if tuple(sorted(codes)) in self.keys or not self._passes_filters(codes):
                self.e_filtered += 1
                continue
            accepted.append((codes, meta, core))
        self.pending = []
        self.pending_keys = set()
        self._cancel_until(0)
        ok = True
        for codes, meta, core in accepted:
            meta.activity = self.cfg.eclause_initial_activity * self.cla_inc
            meta.lbd = len(codes)
            c = self._new_clause(codes, meta, True, core)
            c.eclause = True
            c.touched = self.conflicts
            self.e_added += 1
            if not self._attach_root(c):
                ok = False
                break
        self.overhead += time.perf_counter() - t0
        return ok

    # -- clause database -----------------------------------------------------

    def _locked(self, c) -> bool:
        first = c.lits[0]
        return self.reason[first >> 1] is c and self.value[first] == TRUE

    def reduce_db(self):
        self.reductions += 1
        self.reduce_log.append(self.conflicts)
        for c in self.learnts:
            if c.meta.tier == TIER2 and self.conflicts - c.touched > self.cfg.tier2_idle:
                c.meta.tier = LOCAL
        deletable = [c for c in self.learnts
                     if c.meta.tier == LOCAL and not c.deleted and not self._locked(c)]
        deletable.sort(key=lambda c: (c.meta.activity, c.cid))
        n_del = math.floor(self.cfg.deletion_ratio * len(deletable) + 1e-9)
        for c in deletable[:n_del]:
            c.deleted = True
            self._drop_key(c.lits)
        if n_del:
            self.learnts = [c for c in self.learnts if not c.deleted]

    def _learn(self, learnt, meta, core, lbd):
        meta.lbd = lbd
        meta.tier = tier_for_lbd(lbd)
        meta.activity = 0.0
        c = self._new_clause(learnt, meta, True, core)
        c.touched = self.conflicts
        self._bump_clause(c)
        self.learned_count += 1
        if meta.is_e:
            self.e_derived += 1
        else:
            self.c_learned += 1
        self.learnts.append(c)
        self._add_key(learnt)
        if len(learnt) >= 2:
            self.watches[learnt[0]].append(c)
            self.watches[learnt[1]].append(c)
        self._enqueue(learnt[0], c)

    # -- main loop -----------------------------------------------------------

    def solve(self, time_limit: Optional[float] = None,
              conflict_limit: Optional[int] = None) -> SolveReport:
        start = time.perf_counter()
        deadline = None if time_limit is None else start + time_limit
        cfg = self.cfg
        outcome = None
        next_restart = restart_schedule(1, cfg.restart_base)
        next_reduce = cfg.reduce_first
        if not self.ok:
            outcome = UNSAT
        while outcome is None:
            confl = self.propagate()
            if confl is not None:
                if not self.trail_lim:
                    outcome = UNSAT
                    break
                self.conflicts += 1
                learnt, bt, meta, core = self.analyze(confl)
                level = self.level
                lbd = len({level[q >> 1] for q in learnt})
                if self.sources and meta.symmetric:
                    self._emit(learnt, meta, core)
                self._cancel_until(bt)
                self._learn(learnt, meta, core, lbd)
                self.var_inc /= cfg.var_decay
                self.cla_inc /= cfg.clause_decay
                if self.conflicts == next_reduce:
                    self.reduce_db()
                    next_reduce += cfg.reduce_first + self.reductions * cfg.reduce_inc
                if self.conflicts == next_restart:
                    self.restarts += 1
                    self.restart_log.append(self.conflicts)
                    next_restart += restart_schedule(self.restarts + 1, cfg.restart_base)
                    if not self.install_pending():
                        outcome = UNSAT
                        break
                if conflict_limit is not None and self.conflicts >= conflict_limit:
                    outcome = TIMEOUT
                elif deadline is not None and time.perf_counter() > deadline:
                    outcome = TIMEOUT
            else:
                lit = self._pick_branch()
                if lit < 0:
                    outcome = SAT
                    break
                self.decisions += 1
                if deadline is not None and not self.decisions & 255 \
                        and time.perf_counter() > deadline:
                    outcome = TIMEOUT
                    break
                self.trail_lim.append(len(self.trail))
                self._enqueue(lit, None)
        return self._report(outcome, time.perf_counter() - start)

    def model(self) -> list[int]:
        return [v if self.value[v << 1] == TRUE else -v for v in range(1, self.num_vars + 1)]

    def _report(self, outcome, elapsed) -> SolveReport:
        model = None
        if outcome == SAT:
            model = self.model()
            if evaluate(self.formula, {abs(l): l > 0 for l in model}) is not EvalResult.SATISFIED:
                raise AssertionError("solver produced a model that falsifies the formula")
        live = [c for c in self.learnts if not c.deleted]
        direct_e = sum(1 for c in live if c.eclause)
        return SolveReport(
            outcome=outcome, model=model,
            conflicts=self.conflicts, decisions=self.decisions,
            propagations=self.propagations, restarts=self.restarts,
            reductions=self.reductions, learned=self.learned_count,
            eclauses_generated=self.e_generated, eclauses_filtered=self.e_filtered,
            eclauses_added=self.e_added, eclauses_live=direct_e,
            e_derived=self.e_derived,
            e_derived_live=sum(1 for c in live if c.meta.is_e) - direct_e,
            conflict_clauses=self.c_learned,
            conflict_clauses_live=sum(1 for c in live if not c.meta.is_e),
            level0_tainted=len(self.tainted_level0),
            eclause_overhead_time=self.overhead, total_time=elapsed,
            restart_points=list(self.restart_log), reduce_points=list(self.reduce_log))


def solve(formula: Formula, cfg: Optional[SolverConfig] = None,
          generators: Optional[Sequence[Permutation]] = None,
          time_limit: Optional[float] = None,
          conflict_limit: Optional[int] = None) -> SolveReport:
    return Solver(formula, cfg, generators).solve(time_limit, conflict_limit)
