"""Ordered surjections, the word poset on ``[-n, n]*`` and its principal ideals.

A morphism ``phi`` of FS_B is an *ordered* surjection when, for the
canonical orders ``-n < ... < 0 < ... < n``,

(i)  for each target ``e > 0`` the element ``init phi^-1(e)`` (smallest
     absolute value in the preimage orbit) lies in ``phi^-1(e)`` itself, and
(ii) ``init phi^-1(e) < init phi^-1(f)`` whenever ``0 < e < f``.

Words are ordered by ``v <= w`` when ``v`` embeds in ``w`` as a subword that
contains the first occurrence of every orbit ``{e, -e}`` appearing in ``w``.
By default the fixed orbit ``{0}`` is exempt: zeros of ``w`` may be skipped
freely.  This is the reading under which ``iota`` is an order embedding
(an ordered surjection may send any element to 0, e.g. ``1 0 = iota(id o
(1, 0))`` must dominate ``1``).  Pass ``exempt_zero=False`` for the
reading in which ``{0}`` counts as an orbit like any other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .fsb_core import BMorphism, ShapeError, SignedPerm, compose, enumerate_hom
from .series import Polynomial, RationalFunction

__all__ = [
    "LemmaViolation",
    "osb_flags",
    "is_osb_morphism",
    "osb_compose",
    "enumerate_osb",
    "Word",
    "word_leq",
    "word_leq_bruteforce",
    "iota",
    "iota_order_key",
    "morphism_leq",
    "IdealAutomaton",
    "principal_ideal_automaton",
    "union_accepts",
    "ideal_series",
    "minimal_elements",
    "lift_order",
    "words_of_length",
]


class LemmaViolation(AssertionError):
    """A composite of ordered surjections failed (i) or (ii)."""


def _init_of_orbit(phi: BMorphism, e: int) -> int:
    # smallest |x| over x in phi^-1({e, -e}); only positive sources matter
    return min(i for i, x in enumerate(phi.images, start=1) if abs(x) == e)


def osb_flags(phi: BMorphism) -> tuple[bool, bool]:
    """Truth values of conditions (i) and (ii) for ``phi``."""
    d = phi.target_d
    inits = [_init_of_orbit(phi, e) for e in range(1, d + 1)]
    cond_i = all(phi.images[k - 1] == e for e, k in enumerate(inits, start=1))
    cond_ii = all(a < b for a, b in zip(inits, inits[1:]))
    return cond_i, cond_ii


def is_osb_morphism(phi: BMorphism) -> bool:
    i, ii = osb_flags(phi)
    return i and ii


def osb_compose(psi: BMorphism, phi: BMorphism) -> BMorphism:
    """Compose two ordered surjections; the result is checked to be ordered."""
    if not (is_osb_morphism(phi) and is_osb_morphism(psi)):
        raise ValueError("osb_compose needs ordered surjections")
    out = compose(psi, phi)
    if not is_osb_morphism(out):
        raise LemmaViolation(f"composite {out} of ordered surjections is not ordered")
    return out


def enumerate_osb(n: int, d: int) -> list[BMorphism]:
    return [phi for phi in enumerate_hom(n, d) if is_osb_morphism(phi)]


@dataclass(frozen=True)
class Word:
    """A word over the alphabet ``[-alphabet_n, alphabet_n]``."""

    alphabet_n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if any(abs(x) > self.alphabet_n for x in self.letters):
            raise ValueError(f"letter outside [-{self.alphabet_n}, {self.alphabet_n}]")

    @classmethod
    def parse(cls, alphabet_n: int, text: str) -> "Word":
        return cls(alphabet_n, tuple(int(tok) for tok in text.split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def to_json(self) -> str:
        return json.dumps(list(self.letters))

    @classmethod
    def from_json(cls, alphabet_n: int, text: str) -> "Word":
        return cls(alphabet_n, tuple(json.loads(text)))


def _first_occurrences(letters: Sequence[int], exempt_zero: bool = True) -> frozenset[int]:
    seen: set[int] = {0} if exempt_zero else set()
    out = set()
    for j, x in enumerate(letters):
        if abs(x) not in seen:
            seen.add(abs(x))
            out.add(j)
    return frozenset(out)


def word_leq(v: Word, w: Word, exempt_zero: bool = True) -> bool:
    """``v <= w`` in the word poset."""
    if v.alphabet_n != w.alphabet_n:
        raise ShapeError("words over different alphabets")
    a, b = v.letters, w.letters
    forced = _first_occurrences(b, exempt_zero)
    if len(a) < len(forced):
        return False

    @lru_cache(maxsize=None)
    def ok(i: int, j: int) -> bool:
        if j == len(b):
            return i == len(a)
        if len(a) - i > len(b) - j:
            return False
        match = i < len(a) and a[i] == b[j]
        if j in forced:
            return match and ok(i + 1, j + 1)
        return (match and ok(i + 1, j + 1)) or ok(i, j + 1)

    return ok(0, 0)


def word_leq_bruteforce(v: Word, w: Word, exempt_zero: bool = True) -> bool:
    """The definition itself: search every strictly increasing ``theta``."""
    from itertools import combinations

    a, b = v.letters, w.letters
    for theta in combinations(range(len(b)), len(a)):
        if any(a[i] != b[theta[i]] for i in range(len(a))):
            continue
        if all((exempt_zero and b[j] == 0)
               or any(theta[i] <= j and b[theta[i]] in (b[j], -b[j]) for i in range(len(a)))
               for j in range(len(b))):
            return True
    return False


def iota(phi: BMorphism) -> Word:
    """The word ``phi(1) phi(2) ... phi(n)`` over the target alphabet."""
    return Word(phi.target_d, phi.images)


def iota_order_key(phi: BMorphism) -> tuple:
    """Length-then-lexicographic key on ``iota(phi)``; the well order used for (G1)."""
    return (phi.source_n, phi.images)


def morphism_leq(phi: BMorphism, phi2: BMorphism) -> bool:
    """``phi <= phi2`` for ordered surjections into the same target.

    True when ``phi2 = phi o psi`` for some ordered surjection ``psi``;
    decided by searching all ``psi`` with ``psi(j)`` in ``phi^-1(phi2(j))``.
    """
    if phi.target_d != phi2.target_d:
        raise ShapeError("morphisms into different objects")
    m, n = phi.source_n, phi2.source_n
    if m > n:
        return False
    fibres = {}
    for x in range(-m, m + 1):
        fibres.setdefault(phi(x), []).append(x)
    for imgs in product(*(fibres.get(y, ()) for y in phi2.images)):
        if {abs(x) for x in imgs} >= set(range(1, m + 1)):
            if is_osb_morphism(BMorphism(n, m, imgs)):
                return True
    return False


_DEAD = -1


@dataclass(frozen=True)
class IdealAutomaton:
    """Deterministic automaton over ``[-alphabet_n, alphabet_n]``.

    ``transitions[state]`` maps each letter to the next state; a missing
    letter means rejection.  States are integers.
    """

    alphabet_n: int
    states: tuple[int, ...]
    start: int
    accepting: frozenset[int]
    transitions: dict = field(hash=False, compare=False)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(range(-self.alphabet_n, self.alphabet_n + 1))

    def step(self, state: int, letter: int) -> int:
        if state == _DEAD:
            return _DEAD
        return self.transitions[state].get(letter, _DEAD)

    def accepts(self, word: Word | Sequence[int]) -> bool:
        letters = word.letters if isinstance(word, Word) else word
        s = self.start
        for x in letters:
            s = self.step(s, x)
            if s == _DEAD:
                return False
        return s in self.accepting

    def count_by_length(self, max_len: int) -> list[int]:
        """Number of accepted words of each length ``0..max_len``."""
        vec = {self.start: 1}
        out = []
        for _ in range(max_len + 1):
            out.append(sum(c for s, c in vec.items() if s in self.accepting))
            nxt: dict[int, int] = {}
            for s, c in vec.items():
                for t in self.transitions[s].values():
                    nxt[t] = nxt.get(t, 0) + c
            vec = nxt
        return out

    def transition_table(self) -> str:
        lines = ["state\tletter\tnext"]
        for s in self.states:
            for x in sorted(self.transitions[s]):
                lines.append(f"{s}\t{x}\t{self.transitions[s][x]}")
        lines.append(f"start\t{self.start}")
        lines.append("accepting\t" + " ".join(str(s) for s in sorted(self.accepting)))
        return "\n".join(lines)

    def to_dot(self) -> str:
        lines = ["digraph ideal {", "  rankdir=LR;"]
        for s in self.states:
            shape = "doublecircle" if s in self.accepting else "circle"
            lines.append(f'  q{s} [shape={shape}];')
        lines.append(f"  start [shape=point]; start -> q{self.start};")
        for s in self.states:
            by_target: dict[int, list[int]] = {}
            for x, t in sorted(self.transitions[s].items()):
                by_target.setdefault(t, []).append(x)
            for t, xs in by_target.items():
                lines.append(f'  q{s} -> q{t} [label="{",".join(map(str, xs))}"];')
        lines.append("}")
        return "\n".join(lines)


def principal_ideal_automaton(w: Word, exempt_zero: bool = True) -> IdealAutomaton:
    """Chain automaton for ``{v : v >= w}``.

    State ``k`` means the first ``k`` letters of ``w`` have been matched.
    From state ``k`` the letter ``w[k]`` advances, letters in
    ``Pi_k = {+-w[0], ..., +-w[k-1]}`` (plus 0 when zeros are exempt) loop,
    anything else rejects.  Advancing greedily is safe because the
    ``Pi_k`` are nested.  For the empty word the ideal is ``{0}*``, which is
    just the empty word when zeros are not exempt.
    """
    e = w.letters
    n = len(e)
    trans: dict[int, dict[int, int]] = {}
    pi: set[int] = {0} if exempt_zero else set()
    for k in range(n + 1):
        row = {x: k for x in pi}
        if k < n:
            row[e[k]] = k + 1
            pi |= {e[k], -e[k]}
        trans[k] = row
    return IdealAutomaton(w.alphabet_n, tuple(range(n + 1)), 0, frozenset({n}), trans)


def union_accepts(words: Iterable[Word], v: Word, exempt_zero: bool = True) -> bool:
    return any(principal_ideal_automaton(w, exempt_zero).accepts(v) for w in words)


def _det(mat: list[list[Polynomial]]) -> Polynomial:
    # Bareiss fraction-free elimination over Q[t]
    m = [row[:] for row in mat]
    size = len(m)
    if size == 0:
        return Polynomial([1])
    sign = 1
    prev = Polynomial([1])
    for k in range(size - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, size):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[-1][-1] * sign


def ideal_series(aut: IdealAutomaton) -> RationalFunction:
    """``sum_l #(accepted words of length l) t^l`` by the transfer matrix.

    Solves ``(I - t A) F = accept`` by Cramer's rule over ``Q[t]``, then
    reduces and splits the denominator.
    """
    states = list(aut.states)
    idx = {s: i for i, s in enumerate(states)}
    size = len(states)
    mat = [[Polynomial([1 if i == j else 0]) for j in range(size)] for i in range(size)]
    for s in states:
        for t in aut.transitions[s].values():
            if t == _DEAD:
                continue
            mat[idx[s]][idx[t]] = mat[idx[s]][idx[t]] - Polynomial([0, 1])
    rhs = [Polynomial([1 if s in aut.accepting else 0]) for s in states]
    if all(r.is_zero() for r in rhs):
        return RationalFunction(Polynomial(), ())
    det = _det(mat)
    col = idx[aut.start]
    replaced = [row[:col] + [rhs[i]] + row[col + 1:] for i, row in enumerate(mat)]
    return RationalFunction.from_polys(_det(replaced), det)


def words_of_length(alphabet_n: int, length: int):
    for letters in product(range(-alphabet_n, alphabet_n + 1), repeat=length):
        yield Word(alphabet_n, letters)


def minimal_elements(words: Iterable[Word], length_bound: int, exempt_zero: bool = True) -> set[Word]:
    """Minimal elements of the upward closure of ``words``, up to ``length_bound``.

    The minimal elements of an upward closure are the minimal elements of
    the generating set, so only pairwise comparisons are needed.
    """
    pool = sorted({w for w in words if len(w) <= length_bound}, key=lambda w: (len(w), w.letters))
    out: list[Word] = []
    for w in pool:
        if not any(word_leq(m, w, exempt_zero) for m in out):
            out.append(w)
    return set(out)


def lift_order(phi: BMorphism) -> tuple[SignedPerm, BMorphism]:
    """Relabel the source so that ``phi`` becomes weakly order preserving.

    Returns ``(w, phi o w)``.  Positive sources are sorted stably by
    ``|phi(i)|`` and flipped where ``phi(i) < 0``, so ``phi o w`` has images
    ``0, ..., 0, 1, ..., 1, 2, ...``, which is an ordered surjection.
    """
    order = sorted(range(1, phi.source_n + 1), key=lambda i: (abs(phi(i)), i))
    w = SignedPerm(tuple(i if phi(i) >= 0 else -i for i in order))
    lifted = BMorphism(phi.source_n, phi.target_d, tuple(phi(x) for x in w.images))
    return w, lifted
