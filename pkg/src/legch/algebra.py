"""Exact arithmetic in the free noncommutative unital algebra over Z2.

A polynomial is a finite set of words over named generators; addition is
symmetric difference (characteristic 2), multiplication is pairwise word
concatenation reduced mod 2.  The set representation is canonical, so every
value is automatically a minimal expression.

Small polynomials are stored as explicit word sets.  Products and sums whose
expansion would be enormous (connected-sum closure differentials and iterated
monodromy images grow multiplicatively) are kept symbolic.  Symbolic nodes
denote exactly the same word set; every query either answers through a
certificate that rules out cancellation, or falls back to materialization,
or raises ExpansionTooLarge.  No query ever returns an approximate value.

Word statistics: length() is the number of words, max_count(g) the maximal
multiplicity of a generator within a single word, tau(g) the number of words
attaining that maximum.
"""

from __future__ import annotations

import itertools
import re
import sys
from typing import Iterable, Mapping, Sequence

Word = tuple[str, ...]
EMPTY_WORD: Word = ()

# Products predicted to expand past this stay symbolic.  Kept small so
# substitution into iterated products composes structurally instead of
# re-expanding at every level.
LAZY_THRESHOLD = 64
# Hard cap for on-demand materialization.
EXPANSION_CAP = 5_000_000

_NAME_RE = re.compile(r"[A-Za-z_]\w*(?:\.[A-Za-z_]\w*)*\Z")


class AlgebraError(Exception):
    pass


class ExpansionTooLarge(AlgebraError):
    """A query required materializing more words than EXPANSION_CAP."""


class BadGeneratorName(AlgebraError):
    pass


def check_name(name: str) -> str:
    if not _NAME_RE.match(name):
        raise BadGeneratorName(f"invalid generator name: {name!r}")
    return sys.intern(name)


def _word_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


_KIND_EXPLICIT = "x"
_KIND_PRODUCT = "p"
_KIND_SUM = "s"


class Poly:
    """An element of the free Z2 algebra.  Immutable."""

    __slots__ = ("_kind", "_words", "_factors", "_terms", "_injective", "_cache")

    def __init__(self, _token=None):
        if _token is not _MAKE:
            raise TypeError("use Poly.zero/one/gen/word/from_words or parsing")
        self._kind = _KIND_EXPLICIT
        self._words: frozenset[Word] = frozenset()
        self._factors: tuple[Poly, ...] = ()
        self._terms: tuple[Poly, ...] = ()
        self._injective = True
        self._cache: dict = {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def _explicit(words: frozenset[Word]) -> "Poly":
        p = Poly(_MAKE)
        p._words = words
        return p

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def one() -> "Poly":
        return _ONE

    @staticmethod
    def gen(name: str) -> "Poly":
        return Poly._explicit(frozenset({(check_name(name),)}))

    @staticmethod
    def word(*letters: str) -> "Poly":
        return Poly._explicit(frozenset({tuple(check_name(c) for c in letters)}))

    @staticmethod
    def from_words(words: Iterable[Iterable[str]]) -> "Poly":
        acc: set[Word] = set()
        for w in words:
            word = tuple(check_name(c) for c in w)
            if word in acc:
                acc.discard(word)
            else:
                acc.add(word)
        return Poly._explicit(frozenset(acc))

    # -- basic structure ---------------------------------------------------

    @property
    def is_explicit(self) -> bool:
        return self._kind == _KIND_EXPLICIT

    def __bool__(self) -> bool:
        if self._kind == _KIND_EXPLICIT:
            return bool(self._words)
        if self._kind == _KIND_PRODUCT:
            return all(self._factors)
        # Sum: terms are never Sum nodes (flattened) and never zero.
        if len(self._terms) == 1:
            return bool(self._terms[0])
        if self._cache.get("disjoint") or _pairwise_disjoint(self._terms):
            return True
        return self.length() != 0

    def is_singleton(self) -> bool:
        """True when the value is certainly a single word."""
        if self._kind == _KIND_EXPLICIT:
            return len(self._words) == 1
        if self._kind == _KIND_PRODUCT:
            return all(f.is_singleton() for f in self._factors)
        return len(self._terms) == 1 and self._terms[0].is_singleton()

    def the_word(self) -> Word:
        """The unique word of a singleton polynomial."""
        if self._kind == _KIND_EXPLICIT:
            (w,) = self._words
            return w
        if self._kind == _KIND_PRODUCT:
            out: list[str] = []
            for f in self._factors:
                out.extend(f.the_word())
            return tuple(out)
        return self._terms[0].the_word()

    def alphabet(self) -> frozenset[str]:
        a = self._cache.get("alphabet")
        if a is None:
            if self._kind == _KIND_EXPLICIT:
                a = frozenset(c for w in self._words for c in w)
            elif self._kind == _KIND_PRODUCT:
                a = frozenset().union(*(f.alphabet() for f in self._factors))
            else:
                a = frozenset().union(*(t.alphabet() for t in self._terms))
            self._cache["alphabet"] = a
        return a

    def size_bound(self) -> int:
        """Upper bound on the number of words (exact when cancellation-free)."""
        b = self._cache.get("size_bound")
        if b is None:
            if self._kind == _KIND_EXPLICIT:
                b = len(self._words)
            elif self._kind == _KIND_PRODUCT:
                b = 1
                for f in self._factors:
                    b *= f.size_bound()
            else:
                b = sum(t.size_bound() for t in self._terms)
            self._cache["size_bound"] = b
        return b

    def may_unit(self) -> bool:
        """True when the empty word may belong to the set (superset-sound)."""
        if self._kind == _KIND_EXPLICIT:
            return EMPTY_WORD in self._words
        if self._kind == _KIND_PRODUCT:
            return all(f.may_unit() for f in self._factors)
        return any(t.may_unit() for t in self._terms)

    def has_unit(self) -> bool:
        """Exact membership of the empty word."""
        if self._kind == _KIND_EXPLICIT:
            return EMPTY_WORD in self._words
        if self._kind == _KIND_PRODUCT:
            # multiplicity of the empty word is the product of multiplicities
            return all(f.has_unit() for f in self._factors)
        flag = False
        for t in self._terms:
            flag ^= t.has_unit()
        return flag

    def count_bounds(self, letter: str) -> tuple[int, int]:
        """Bounds on the multiplicity of `letter` across words (superset-sound)."""
        key = ("cb", letter)
        b = self._cache.get(key)
        if b is None:
            if self._kind == _KIND_EXPLICIT:
                if not self._words:
                    b = (0, 0)
                else:
                    counts = [w.count(letter) for w in self._words]
                    b = (min(counts), max(counts))
            elif self._kind == _KIND_PRODUCT:
                lo = hi = 0
                for f in self._factors:
                    flo, fhi = f.count_bounds(letter)
                    lo += flo
                    hi += fhi
                b = (lo, hi)
            else:
                los, his = zip(*(t.count_bounds(letter) for t in self._terms))
                b = (min(los), max(his))
            self._cache[key] = b
        return b

    def len_bounds(self) -> tuple[int, int]:
        """Bounds on word lengths (superset-sound)."""
        b = self._cache.get("len_bounds")
        if b is None:
            if self._kind == _KIND_EXPLICIT:
                if not self._words:
                    b = (0, 0)
                else:
                    lens = [len(w) for w in self._words]
                    b = (min(lens), max(lens))
            elif self._kind == _KIND_PRODUCT:
                lo = hi = 0
                for f in self._factors:
                    flo, fhi = f.len_bounds()
                    lo += flo
                    hi += fhi
                b = (lo, hi)
            else:
                los, his = zip(*(t.len_bounds() for t in self._terms))
                b = (min(los), max(his))
            self._cache["len_bounds"] = b
        return b

    def may_last_letters(self) -> tuple[frozenset[str], bool]:
        """(possible last letters, may the empty word occur) -- superset-sound."""
        r = self._cache.get("last")
        if r is None:
            if self._kind == _KIND_EXPLICIT:
                letters = frozenset(w[-1] for w in self._words if w)
                r = (letters, EMPTY_WORD in self._words)
            elif self._kind == _KIND_PRODUCT:
                letters: set[str] = set()
                empty_ok = True
                for f in reversed(self._factors):
                    fl, fe = f.may_last_letters()
                    letters |= fl
                    if not fe:
                        empty_ok = False
                        break
                r = (frozenset(letters), empty_ok)
            else:
                parts = [t.may_last_letters() for t in self._terms]
                r = (
                    frozenset().union(*(p[0] for p in parts)),
                    any(p[1] for p in parts),
                )
            self._cache["last"] = r
        return r

    def may_first_letters(self) -> tuple[frozenset[str], bool]:
        r = self._cache.get("first")
        if r is None:
            if self._kind == _KIND_EXPLICIT:
                letters = frozenset(w[0] for w in self._words if w)
                r = (letters, EMPTY_WORD in self._words)
            elif self._kind == _KIND_PRODUCT:
                letters: set[str] = set()
                empty_ok = True
                for f in self._factors:
                    fl, fe = f.may_first_letters()
                    letters |= fl
                    if not fe:
                        empty_ok = False
                        break
                r = (frozenset(letters), empty_ok)
            else:
                parts = [t.may_first_letters() for t in self._terms]
                r = (
                    frozenset().union(*(p[0] for p in parts)),
                    any(p[1] for p in parts),
                )
            self._cache["first"] = r
        return r

    # -- exact membership --------------------------------------------------

    def contains(self, word: Word) -> bool:
        if self._kind == _KIND_EXPLICIT:
            return word in self._words
        if self._kind == _KIND_SUM:
            flag = False
            for t in self._terms:
                flag ^= t.contains(word)
            return flag
        # Product: parity of the number of admissible splits.
        n = len(word)
        factors = self._factors
        # parity[i] over positions: ways to split word[:pos] into factors[:i]
        cur = [False] * (n + 1)
        cur[0] = True
        for f in factors:
            nxt = [False] * (n + 1)
            flo, fhi = f.len_bounds()
            for start in range(n + 1):
                if not cur[start]:
                    continue
                for end in range(start + flo, min(n, start + fhi) + 1):
                    if f.contains(word[start:end]):
                        nxt[end] = not nxt[end]
            cur = nxt
        return cur[n]

    # -- materialization ---------------------------------------------------

    def expand(self, cap: int | None = None) -> frozenset[Word]:
        cached = self._cache.get("expanded")
        if cached is not None:
            return cached
        limit = EXPANSION_CAP if cap is None else cap
        if self.size_bound() > limit:
            raise ExpansionTooLarge(
                f"expansion bound {self.size_bound()} exceeds cap {limit}"
            )
        if self._kind == _KIND_EXPLICIT:
            out = self._words
        elif self._kind == _KIND_SUM:
            acc: set[Word] = set()
            for t in self._terms:
                acc ^= t.expand(limit)
            out = frozenset(acc)
        else:
            factor_words = [f.expand(limit) for f in self._factors]
            if self._injective:
                out = frozenset(
                    tuple(itertools.chain.from_iterable(combo))
                    for combo in itertools.product(*factor_words)
                )
            else:
                acc = set()
                for combo in itertools.product(*factor_words):
                    w = tuple(itertools.chain.from_iterable(combo))
                    if w in acc:
                        acc.discard(w)
                    else:
                        acc.add(w)
                out = frozenset(acc)
        self._cache["expanded"] = out
        return out

    def words(self) -> frozenset[Word]:
        """Explicit word set (materializes; may raise ExpansionTooLarge)."""
        return self.expand()

    def canonical_words(self) -> list[Word]:
        """Words in length-then-lexicographic order."""
        return sorted(self.expand(), key=_word_key)

    # -- statistics --------------------------------------------------------

    def length(self) -> int:
        """Exact number of words in the canonical form."""
        v = self._cache.get("length")
        if v is not None:
            return v
        if self._kind == _KIND_EXPLICIT:
            v = len(self._words)
        elif self._kind == _KIND_PRODUCT:
            if self._injective:
                v = 1
                for f in self._factors:
                    v *= f.length()
            else:
                v = len(self.expand())
        else:
            v = self._sum_length()
        self._cache["length"] = v
        return v

    def _sum_length(self) -> int:
        terms = self._terms
        if self._cache.get("disjoint") or _pairwise_disjoint(terms):
            return sum(t.length() for t in terms)
        # Singleton terms can be resolved by exact membership tests.
        singles = [t for t in terms if t.is_singleton()]
        bigs = [t for t in terms if not t.is_singleton()]
        if len(bigs) == 1 and _pairwise_disjoint(singles):
            big = bigs[0]
            n = big.length()
            for s in singles:
                n += -1 if big.contains(s.the_word()) else 1
            return n
        return len(self.expand())

    def max_count(self, g: str) -> int:
        return self._top_stats(g)[0]

    def tau(self, g: str) -> int:
        return self._top_stats(g)[1]

    def _top_stats(self, g: str) -> tuple[int, int]:
        """Exact (max multiplicity of g, number of words attaining it).

        Convention for the zero polynomial: (0, 0).
        """
        key = ("top", g)
        v = self._cache.get(key)
        if v is not None:
            return v
        v = self._top_stats_uncached(g)
        self._cache[key] = v
        return v

    def _top_stats_uncached(self, g: str) -> tuple[int, int]:
        if self._kind == _KIND_EXPLICIT:
            if not self._words:
                return (0, 0)
            m = max(w.count(g) for w in self._words)
            return (m, sum(1 for w in self._words if w.count(g) == m))
        if self._kind == _KIND_PRODUCT:
            parts = [f._top_stats(g) for f in self._factors]
            m = sum(p[0] for p in parts)
            if self._injective:
                t = 1
                for p in parts:
                    t *= p[1]
                return (m, t)
            slices = [f.slice(g, p[0]) for f, p in zip(self._factors, parts)]
            top = _make_product(slices)
            if top._kind != _KIND_PRODUCT or top._injective:
                return (m, top.length())
            return _explicit_top(self.expand(), g)
        # Sum node.  Words with fewer than the maximal multiplicity can never
        # cancel against words attaining it, so lower terms are irrelevant.
        stats = [
            (t, t._top_stats(g))
            for t in self._terms
            if not _definitely_zero(t)
        ]
        if not stats:
            return (0, 0)
        m = max(s[1][0] for s in stats)
        tops = [(t, s) for t, s in stats if s[0] == m]
        if len(tops) == 1:
            return (m, tops[0][1][1])
        slices = [t.slice(g, m) for t, _ in tops]
        if _pairwise_disjoint(slices):
            return (m, sum(s[1] for _, s in tops))
        return _explicit_top(self.expand(), g)

    def slice(self, g: str, k: int) -> "Poly":
        """The sub-polynomial of words with exactly k occurrences of g."""
        if self._kind == _KIND_EXPLICIT:
            return Poly._explicit(frozenset(w for w in self._words if w.count(g) == k))
        if self._kind == _KIND_SUM:
            return _make_sum([t.slice(g, k) for t in self._terms])
        ranges = []
        for f in self._factors:
            lo, hi = f.count_bounds(g)
            ranges.append(range(lo, hi + 1))
        pieces = []
        for combo in itertools.product(*ranges):
            if sum(combo) != k:
                continue
            pieces.append(
                _make_product([f.slice(g, c) for f, c in zip(self._factors, combo)])
            )
        return _make_sum(pieces)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return mul(self, other)

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        """Letter-wise renaming; the mapping must be injective on the alphabet."""
        relevant = {a: b for a, b in mapping.items() if a in self.alphabet()}
        if not relevant:
            return self
        values = list(relevant.values())
        if len(set(values)) != len(values):
            raise BadGeneratorName("renaming is not injective")
        for target in values:
            check_name(target)
            if target in self.alphabet() and target not in relevant:
                raise BadGeneratorName(
                    f"renaming collides with existing generator {target!r}"
                )
        if self._kind == _KIND_EXPLICIT:
            return Poly._explicit(
                frozenset(tuple(relevant.get(c, c) for c in w) for w in self._words)
            )
        clone = Poly(_MAKE)
        clone._kind = self._kind
        clone._injective = self._injective
        if self._kind == _KIND_PRODUCT:
            clone._factors = tuple(f.rename(relevant) for f in self._factors)
        else:
            clone._terms = tuple(t.rename(relevant) for t in self._terms)
        return clone

    # -- comparison / display ----------------------------------------------

    def _struct_eq(self, other: "Poly") -> bool | None:
        """True when structurally identical; None when undecided."""
        if self is other:
            return True
        if self._kind != other._kind:
            return None
        if self._kind == _KIND_EXPLICIT:
            return self._words == other._words
        if self._kind == _KIND_PRODUCT:
            if len(self._factors) != len(other._factors):
                return None
            oks = [a._struct_eq(b) for a, b in zip(self._factors, other._factors)]
        else:
            if len(self._terms) != len(other._terms):
                return None
            oks = [a._struct_eq(b) for a, b in zip(self._terms, other._terms)]
        if all(ok is True for ok in oks):
            return True
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        s = self._struct_eq(other)
        if s is True:
            return True
        return self.expand() == other.expand()

    def __hash__(self) -> int:
        return hash(self.expand())

    def __repr__(self) -> str:
        if self.size_bound() <= 16 or self.is_explicit:
            try:
                return f"Poly({poly_to_str(self)!r})"
            except ExpansionTooLarge:  # pragma: no cover
                pass
        return f"Poly(<symbolic, <= {self.size_bound()} words>)"


class _Make:
    pass


_MAKE = _Make()


def _definitely_zero(p: Poly) -> bool:
    """Cheap conservative zero test: never expands.  A False answer only
    means "possibly nonzero"; callers use it for shortcuts, not semantics."""
    if p._kind == _KIND_EXPLICIT:
        return not p._words
    if p._kind == _KIND_PRODUCT:
        return any(_definitely_zero(f) for f in p._factors)
    return all(_definitely_zero(t) for t in p._terms)

_ZERO = Poly._explicit(frozenset())
_ONE = Poly._explicit(frozenset({EMPTY_WORD}))


# -- node construction with cancellation certificates ------------------------


def _pairwise_disjoint(polys) -> bool:
    polys = [p for p in polys if not _definitely_zero(p)]
    for a, b in itertools.combinations(polys, 2):
        if not _certainly_disjoint(a, b):
            return False
    return True


def _certainly_disjoint(a: Poly, b: Poly) -> bool:
    """Certificate that the word sets of a and b share no word."""
    alo, ahi = a.len_bounds()
    blo, bhi = b.len_bounds()
    if ahi < blo or bhi < alo:
        return True
    for letter in _candidate_letters(a.alphabet() - b.alphabet()):
        if a.count_bounds(letter)[0] >= 1:
            return True
    for letter in _candidate_letters(b.alphabet() - a.alphabet()):
        if b.count_bounds(letter)[0] >= 1:
            return True
    if a.is_explicit and b.is_explicit:
        return not (a._words & b._words)
    return False


def _candidate_letters(letters: frozenset[str], limit: int = 24):
    return itertools.islice(sorted(letters), limit)


class _PrefixProfile:
    """Superset-sound profile of the partial product f1 ... fi."""

    def __init__(self):
        self.alphabet: frozenset[str] = frozenset()
        self.factors: list[Poly] = []
        self.singleton = True
        self.may_unit = True

    def absorb(self, f: Poly) -> None:
        self.alphabet |= f.alphabet()
        self.factors.append(f)
        self.singleton = self.singleton and f.is_singleton()
        self.may_unit = self.may_unit and f.may_unit()

    def count_bounds(self, letter: str) -> tuple[int, int]:
        lo = hi = 0
        for f in self.factors:
            flo, fhi = f.count_bounds(letter)
            lo += flo
            hi += fhi
        return (lo, hi)

    def last_letters(self) -> tuple[frozenset[str], bool]:
        letters: set[str] = set()
        empty_ok = True
        for f in reversed(self.factors):
            fl, fe = f.may_last_letters()
            letters |= fl
            if not fe:
                empty_ok = False
                break
        return (frozenset(letters), empty_ok)


def _pair_injective(prefix: _PrefixProfile, g: Poly) -> bool:
    """Certificate that (w, v) -> w v is injective on prefix-words x g-words."""
    # Disjoint alphabets: the namespace of each letter recovers the split.
    if not (prefix.alphabet & g.alphabet()):
        return True
    # A singleton side fixes the split position.
    if prefix.singleton or g.is_singleton():
        return True
    # Right suffix marker: every nonempty g-word ends with a letter delta that
    # the prefix never uses, carries it exactly once, and no nonempty g-word
    # is a proper suffix of another.
    if g.is_explicit and len(g._words) <= 32:
        nonempty = [w for w in g._words if w]
        if nonempty:
            delta = nonempty[0][-1]
            if (
                delta not in prefix.alphabet
                and all(w[-1] == delta and w.count(delta) == 1 for w in nonempty)
                and not any(
                    len(u) < len(v) and v[len(v) - len(u) :] == u
                    for u in nonempty
                    for v in nonempty
                )
            ):
                return True
    # Left suffix marker: every prefix-word ends with the same letter delta,
    # contains it exactly once, and g never uses delta; split after delta.
    last, empty_ok = prefix.last_letters()
    if not empty_ok and len(last) == 1:
        (delta,) = last
        if delta not in g.alphabet() and prefix.count_bounds(delta) == (1, 1):
            return True
    # Mirror: every nonempty g-word starts with a unique marker letter.
    first, g_empty = g.may_first_letters()
    if len(first) == 1:
        (delta,) = first
        if delta not in prefix.alphabet:
            glo, ghi = g.count_bounds(delta)
            if ghi == 1 and (g_empty or glo == 1):
                return True
    return False


def _make_product(factors: Iterable[Poly]) -> Poly:
    flat: list[Poly] = []
    for f in factors:
        if _definitely_zero(f):
            return _ZERO
        if f._kind == _KIND_EXPLICIT and f._words == _ONE._words:
            continue
        # nested products stay nested: a factor whose words all end (or
        # start) with a marker letter keeps that shape visible to the
        # injectivity certificates below
        flat.append(f)
    if not flat:
        return _ONE
    if len(flat) == 1:
        return flat[0]
    prefix = _PrefixProfile()
    prefix.absorb(flat[0])
    injective = True
    for f in flat[1:]:
        if injective and not _pair_injective(prefix, f):
            injective = False
        prefix.absorb(f)
    node = Poly(_MAKE)
    node._kind = _KIND_PRODUCT
    node._factors = tuple(flat)
    node._injective = injective
    return node


def _make_sum(terms: Iterable[Poly]) -> Poly:
    flat: list[Poly] = []
    explicit: set[Word] = set()
    for t in terms:
        if _definitely_zero(t):
            continue
        if t._kind == _KIND_SUM:
            subs = t._terms
        else:
            subs = (t,)
        for s in subs:
            if s._kind == _KIND_EXPLICIT and len(s._words) + len(explicit) <= LAZY_THRESHOLD:
                explicit ^= s._words
            else:
                # identical symbolic terms cancel in pairs
                for i, existing in enumerate(flat):
                    if existing._struct_eq(s) is True:
                        del flat[i]
                        break
                else:
                    flat.append(s)
    if explicit:
        flat.insert(0, Poly._explicit(frozenset(explicit)))
    if not flat:
        return _ZERO
    if len(flat) == 1:
        return flat[0]
    node = Poly(_MAKE)
    node._kind = _KIND_SUM
    node._terms = tuple(flat)
    return node


def unsafe_injective_product(factors: Iterable[Poly]) -> Poly:
    """Product node whose concatenation map the CALLER asserts is injective.

    For use by builders that can prove cancellation-freeness structurally
    where the generic certificates cannot; a wrong assertion makes length
    and tau queries wrong, so every call site must carry a proof sketch.
    """
    node = _make_product(factors)
    if node._kind == _KIND_PRODUCT:
        node._injective = True
    return node


def unsafe_disjoint_sum(terms: Sequence[Poly]) -> Poly:
    """Sum node whose terms the CALLER asserts are pairwise word-disjoint.

    Terms are kept as given (no flattening or merging) so nested structure
    survives; same trust contract as unsafe_injective_product.
    """
    terms = [t for t in terms if not _definitely_zero(t)]
    if not terms:
        return _ZERO
    if len(terms) == 1:
        return terms[0]
    node = Poly(_MAKE)
    node._kind = _KIND_SUM
    node._terms = tuple(terms)
    node._cache["disjoint"] = True
    return node


# -- public operations --------------------------------------------------------


def add(p: Poly, q: Poly) -> Poly:
    """Sum in characteristic 2: symmetric difference of word sets."""
    if _definitely_zero(p):
        return q
    if _definitely_zero(q):
        return p
    if (
        p._kind == _KIND_EXPLICIT
        and q._kind == _KIND_EXPLICIT
        and len(p._words) + len(q._words) <= LAZY_THRESHOLD
    ):
        return Poly._explicit(p._words ^ q._words)
    return _make_sum([p, q])


def mul(p: Poly, q: Poly) -> Poly:
    """Product: all pairwise concatenations, reduced mod 2."""
    if _definitely_zero(p) or _definitely_zero(q):
        return _ZERO
    if p is _ONE or (p._kind == _KIND_EXPLICIT and p._words == _ONE._words):
        return q
    if q is _ONE or (q._kind == _KIND_EXPLICIT and q._words == _ONE._words):
        return p
    bound = p.size_bound() * q.size_bound()
    if bound <= LAZY_THRESHOLD:
        acc: set[Word] = set()
        for wp in p.expand():
            for wq in q.expand():
                w = wp + wq
                if w in acc:
                    acc.discard(w)
                else:
                    acc.add(w)
        return Poly._explicit(frozenset(acc))
    return _make_product([p, q])


def length(p: Poly) -> int:
    return p.length()


def max_count(p: Poly, g: str) -> int:
    return p.max_count(check_name(g))


def tau(p: Poly, g: str) -> int:
    return p.tau(check_name(g))


def _explicit_top(words: frozenset[Word], g: str) -> tuple[int, int]:
    if not words:
        return (0, 0)
    m = max(w.count(g) for w in words)
    return (m, sum(1 for w in words if w.count(g) == m))


class AlgebraMap:
    """A generator-to-polynomial substitution, applied as a unital
    algebra homomorphism.  Unmapped generators are fixed."""

    __slots__ = ("assignments",)

    def __init__(self, assignments: Mapping[str, Poly]):
        self.assignments = {check_name(k): v for k, v in assignments.items()}

    @staticmethod
    def identity() -> "AlgebraMap":
        return AlgebraMap({})

    def __call__(self, name: str) -> Poly:
        img = self.assignments.get(name)
        if img is None:
            return Poly.gen(name)
        return img

    def moved(self) -> frozenset[str]:
        return frozenset(self.assignments)

    def apply(self, p: Poly) -> Poly:
        keys = self.assignments.keys()
        if not keys or p.alphabet().isdisjoint(keys):
            return p
        if p._kind == _KIND_EXPLICIT:
            acc = _ZERO
            for w in p._words:
                img = _ONE
                for c in w:
                    img = mul(img, self(c))
                acc = add(acc, img)
            return acc
        if p._kind == _KIND_PRODUCT:
            out = _ONE
            for f in p._factors:
                out = mul(out, self.apply(f))
            return out
        acc = _ZERO
        for t in p._terms:
            acc = add(acc, self.apply(t))
        return acc

    def compose(self, inner: "AlgebraMap") -> "AlgebraMap":
        """self after inner: g -> self(inner(g))."""
        out: dict[str, Poly] = {}
        for g in set(self.assignments) | set(inner.assignments):
            out[g] = self.apply(inner(g))
        return AlgebraMap(out)

    def normalized(self) -> dict[str, Poly]:
        return {
            g: img
            for g, img in self.assignments.items()
            if not (img.is_singleton() and img.the_word() == (g,))
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraMap):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.keys() == b.keys() and all(a[g] == b[g] for g in a)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{g} -> {poly_to_str(img) if img.size_bound() <= 16 else '<symbolic>'}"
            for g, img in sorted(self.assignments.items())
        )
        return f"AlgebraMap({{{parts}}})"


def apply_map(m: AlgebraMap, p: Poly) -> Poly:
    return m.apply(p)


def compose(outer: AlgebraMap, inner: AlgebraMap) -> AlgebraMap:
    return outer.compose(inner)


# -- textual syntax -----------------------------------------------------------
#
# Terms separated by `+`, letters of a word separated by whitespace, unit
# written `1`, zero written `0`.  Example: "1 + b1 b2 + k1.b3".


def poly_from_str(text: str) -> Poly:
    text = text.strip()
    if text == "0":
        return _ZERO
    if not text:
        raise AlgebraError("empty polynomial string (write '0' for zero)")
    words: list[Word] = []
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise AlgebraError(f"malformed polynomial string: {text!r}")
        if term == "1":
            words.append(EMPTY_WORD)
        elif term == "0":
            raise AlgebraError("'0' is only valid as the whole polynomial")
        else:
            words.append(tuple(check_name(c) for c in term.split()))
    return Poly.from_words(words)


def word_to_str(w: Word) -> str:
    return "1" if not w else " ".join(w)


def poly_to_str(p: Poly) -> str:
    """Canonical textual form: words ordered by length then lexicographically."""
    ws = p.canonical_words()
    if not ws:
        return "0"
    return " + ".join(word_to_str(w) for w in ws)
