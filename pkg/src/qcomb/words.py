"""Word calculus on the two-letter alphabet {o, x}.

Words are plain Python strings over ``o`` (white) and ``x`` (black); the
empty word is ``""`` and serializes as ``e``.  This module provides color
balance, conjugation, elementary cancellations, the catalog of admissible
word sets (sets closed under concatenation, conjugation and cancellation
of an adjacent ``ox``/``xo`` pair), bounded generated closures,
classification of a generated closure against the catalog, and the
canonical reduction of a balanced word to ``o^k x^k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

WHITE = "o"
BLACK = "x"
ALPHABET = (WHITE, BLACK)

_FLIP = str.maketrans("ox", "xo")

INF = math.inf


class NoCatalogMatch(Exception):
    """The generated set matches no catalog truncation (bug or bound too small)."""


class PreconditionViolated(Exception):
    pass


def validate_word(w: str) -> str:
    if any(c not in ALPHABET for c in w):
        raise ValueError(f"invalid letters in word {w!r}")
    return w


def word_to_str(w: str) -> str:
    """Serialize a word; the empty word prints as 'e'."""
    return w if w else "e"


def word_from_str(s: str) -> str:
    if s == "e":
        return ""
    return validate_word(s)


def color_balance(w: str) -> int:
    """Number of white letters minus number of black letters."""
    return w.count(WHITE) - w.count(BLACK)


def conjugate(w: str) -> str:
    """Reverse the word and flip every letter; an involution."""
    return w[::-1].translate(_FLIP)


def prefix_balances(w: str) -> list[int]:
    """Balances of the prefixes w[:1], ..., w[:n]."""
    out = []
    c = 0
    for ch in w:
        c += 1 if ch == WHITE else -1
        out.append(c)
    return out


def cancellations(w: str) -> set[str]:
    """All words obtained by deleting one adjacent 'ox' or 'xo' pair."""
    out = set()
    for i in range(len(w) - 1):
        if w[i] != w[i + 1]:
            out.add(w[:i] + w[i + 2 :])
    return out


def all_words(max_len: int) -> Iterator[str]:
    """All words of length <= max_len, shortest first."""
    level = [""]
    yield ""
    for _ in range(max_len):
        level = [w + c for w in level for c in ALPHABET]
        yield from level


# ---------------------------------------------------------------------------
# Catalog of admissible sets


@dataclass(frozen=True)
class AdmissibleSetSpec:
    """One entry of the admissible-set catalog.

    kinds:
      - "empty"                  the empty set
      - "mod",   k >= 1          balanced-mod-k words
      - "white", 0 <= k <= inf   balanced, prefix balances in [0, k]
      - "black", 0 <= k <= inf   balanced, prefix balances in [-k, 0]
      - "pair",  k, k' >= 1      balanced, prefix balances in [-k', k]
    Use the module-level constructors; they canonicalize degenerate
    parameters so each set of words has a unique spec.
    """

    kind: str
    k: float | int | None = None
    k2: float | int | None = None

    def __str__(self) -> str:
        def fmt(v):
            return "inf" if v == INF else str(v)

        if self.kind == "empty":
            return "Empty"
        if self.kind == "mod":
            return f"ModK({fmt(self.k)})"
        if self.kind == "white":
            return f"White({fmt(self.k)})"
        if self.kind == "black":
            return f"Black({fmt(self.k)})"
        return f"Pair({fmt(self.k)},{fmt(self.k2)})"


def empty_set() -> AdmissibleSetSpec:
    return AdmissibleSetSpec("empty")


def mod_k(k: int) -> AdmissibleSetSpec:
    if k < 1:
        raise ValueError("mod_k requires k >= 1")
    return AdmissibleSetSpec("mod", int(k))


def _check_bound(k) -> float | int:
    if k == INF:
        return INF
    k = int(k)
    if k < 0:
        raise ValueError("bound must be >= 0")
    return k


def white(k) -> AdmissibleSetSpec:
    return AdmissibleSetSpec("white", _check_bound(k))


def black(k) -> AdmissibleSetSpec:
    k = _check_bound(k)
    if k == 0:
        return white(0)  # Black(0) = White(0) = {empty word}
    return AdmissibleSetSpec("black", k)


def pair(k, k2) -> AdmissibleSetSpec:
    k, k2 = _check_bound(k), _check_bound(k2)
    if k2 == 0:
        return white(k)
    if k == 0:
        return black(k2)
    return AdmissibleSetSpec("pair", k, k2)


def member(spec: AdmissibleSetSpec, w: str) -> bool:
    """Decide membership in one left-to-right scan."""
    if spec.kind == "empty":
        return False
    if spec.kind == "mod":
        return color_balance(w) % spec.k == 0
    lo: float
    hi: float
    if spec.kind == "white":
        lo, hi = 0, spec.k
    elif spec.kind == "black":
        lo, hi = -spec.k, 0
    else:
        lo, hi = -spec.k2, spec.k
    c = 0
    for ch in w:
        c += 1 if ch == WHITE else -1
        if not (lo <= c <= hi):
            return False
    return c == 0


def canonical_generators(spec: AdmissibleSetSpec) -> set[str]:
    """Generators of the set, where it is finitely generated."""
    if spec.kind == "empty":
        return set()
    if spec.kind == "mod":
        return {WHITE * spec.k}
    if INF in (spec.k, spec.k2):
        raise ValueError(f"{spec} is not finitely generated")
    if spec.kind == "white":
        return {WHITE * spec.k + BLACK * spec.k} if spec.k else {""}
    if spec.kind == "black":
        return {BLACK * spec.k + WHITE * spec.k}
    return {WHITE * spec.k + BLACK * spec.k, BLACK * spec.k2 + WHITE * spec.k2}


# ---------------------------------------------------------------------------
# Generated closures


@dataclass(frozen=True)
class GeneratedWordSet:
    generators: frozenset[str]
    length_bound: int
    members: frozenset[str]

    def __contains__(self, w: str) -> bool:
        return w in self.members


def generate(gens: Iterable[str], length_bound: int, headroom: int = 0) -> GeneratedWordSet:
    """Least fixpoint of {concatenation, conjugation, one cancellation},
    truncated to words of length <= length_bound.

    Some short members are only derivable through longer intermediates
    (a concatenation followed by cancellations); headroom admits
    intermediate words up to length_bound + headroom, keeping only the
    final slice.  Every returned word is genuinely derivable."""
    gens = frozenset(validate_word(g) for g in gens)
    if any(len(g) > length_bound for g in gens):
        raise ValueError("generator longer than the length bound")
    bound = length_bound + headroom
    members: set[str] = set(gens)
    queue = list(gens)
    while queue:
        w = queue.pop()
        new = {conjugate(w)}
        new |= cancellations(w)
        for v in members:
            for cat in (w + v, v + w):
                if len(cat) <= bound:
                    new.add(cat)
        for v in new:
            if v not in members:
                members.add(v)
                queue.append(v)
    return GeneratedWordSet(
        gens, length_bound, frozenset(w for w in members if len(w) <= length_bound)
    )


def truncation(spec: AdmissibleSetSpec, length_bound: int) -> frozenset[str]:
    """Members of the set with length <= length_bound."""
    return frozenset(w for w in all_words(length_bound) if member(spec, w))


@dataclass(frozen=True)
class ClassificationResult:
    spec: AdmissibleSetSpec
    flags: tuple[str, ...] = ()
    length_bound: int = 0


def _candidate_specs(length_bound: int) -> list[AdmissibleSetSpec]:
    """Catalog entries whose length-bounded truncations can differ,
    in reporting priority (smallest parameters first)."""
    half = length_bound // 2
    cands: list[AdmissibleSetSpec] = [empty_set(), white(0)]
    for k in range(1, half + 1):
        cands.append(white(k))
        cands.append(black(k))
    cands.append(white(INF))
    cands.append(black(INF))
    finite = list(range(1, half + 1))
    for k in finite + [INF]:
        for k2 in finite + [INF]:
            sp = pair(k, k2)
            if sp.kind == "pair":
                cands.append(sp)
    for k in range(1, length_bound + 1):
        cands.append(mod_k(k))
    return cands


def classify(gens: Iterable[str], length_bound: int) -> ClassificationResult:
    """Match the generated closure against the catalog of admissible sets.

    Truncation semantics: specs are compared through their length-bounded
    slices; when several parameters give the same slice, the smallest one
    is reported and the ambiguity is flagged.
    """
    gens = frozenset(gens)
    max_gen = max((len(g) for g in gens), default=0)
    if gens and length_bound < max_gen:
        raise ValueError("length bound must cover the longest generator")
    # The closure slice can only grow toward the true set as the headroom
    # increases, and every derived word lies in the true set.  So as soon
    # as the slice coincides with a catalog truncation, that catalog set
    # contains the generators and hence the whole closure, and the match
    # is the answer; widen the headroom until that happens.
    cands = _candidate_specs(length_bound)
    matches: list[AdmissibleSetSpec] = []
    for headroom in range(0, 2 * max_gen + 5, 2):
        closed = generate(gens, length_bound, headroom).members
        matches = [sp for sp in cands if truncation(sp, length_bound) == closed]
        if matches:
            break
    if not matches:
        raise NoCatalogMatch(
            f"no catalog truncation at L={length_bound} equals the closure of {sorted(gens)}"
        )
    spec = matches[0]
    flags = []
    if len(matches) > 1:
        flags.append("parameter may be larger: " + ", ".join(str(m) for m in matches[1:]))
    if INF in (spec.k, spec.k2):
        flags.append("infinite parameter certified only up to the length bound")
    return ClassificationResult(spec, tuple(flags), length_bound)


# ---------------------------------------------------------------------------
# Canonical reduction


def _runs(w: str) -> list[tuple[int, int]]:
    """Split a balanced word starting with 'o' into (white, black) run pairs."""
    runs: list[tuple[int, int]] = []
    i = 0
    n = len(w)
    while i < n:
        a = i
        while i < n and w[i] == WHITE:
            i += 1
        b = i
        while i < n and w[i] == BLACK:
            i += 1
        runs.append((b - a, i - b))
    return runs


def reduce(w: str, k: int) -> list[str]:
    """Cancellation trace from w down to o^k x^k.

    Requires w balanced with prefix balances in [0, k] and maximum prefix
    balance exactly k.  Each consecutive pair of trace entries differs by
    one elementary cancellation; the trace starts at w and ends at o^k x^k.
    """
    validate_word(w)
    bals = prefix_balances(w)
    if not member(white(k), w) or (max(bals, default=0) != k):
        raise PreconditionViolated(
            f"{word_to_str(w)} is not a White({k}) word with peak balance {k}"
        )
    trace = [w]
    cur = w
    while True:
        runs = _runs(cur)
        n = len(runs)
        if n <= 1:
            break
        # index (0-based) of the first run pair whose white peak reaches k
        peak = 0
        t = None
        for idx, (i_r, j_r) in enumerate(runs):
            peak += i_r
            if peak == k and t is None:
                t = idx
            peak -= j_r
        assert t is not None
        if t <= n - 2:
            # trailing pair absorbs into its left neighbour: cancel 'ox'
            # at the last white/black junction i_n times
            i_n = runs[-1][0]
            pos = len(cur) - runs[-1][1] - 1  # last white letter
            for _ in range(i_n):
                cur = cur[:pos] + cur[pos + 2 :]
                pos -= 1
                trace.append(cur)
        else:
            # peak in the last pair: cancel 'ox' at the first junction j_1 times
            j_1 = runs[0][1]
            pos = runs[0][0] - 1  # last white letter of the first run
            for _ in range(j_1):
                cur = cur[:pos] + cur[pos + 2 :]
                pos -= 1
                trace.append(cur)
    assert cur == WHITE * k + BLACK * k
    return trace


def sample_peak_word(k: int, max_len: int, rng) -> str:
    """Random balanced word with prefix balances in [0, k] and maximum
    prefix balance exactly k, of length between 2k and max_len."""
    if k < 1 or max_len < 2 * k:
        raise ValueError("need k >= 1 and max_len >= 2k")
    while True:
        half = rng.randint(k, max_len // 2)
        c, w = 0, []
        for step in range(2 * half):
            remaining = 2 * half - step
            can_up = c < k and c + 1 <= remaining - 1
            can_down = c > 0
            if not can_down:
                up = True
            elif not can_up:
                up = False
            else:
                up = rng.random() < 0.5
            c += 1 if up else -1
            w.append(WHITE if up else BLACK)
        word = "".join(w)
        if max(prefix_balances(word)) == k:
            return word
