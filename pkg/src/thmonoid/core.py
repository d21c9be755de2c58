"""Words, prefix codes and end inclusion over a k-letter alphabet.

Words are plain strings over the first k lowercase letters, so Python's
string order is already the dictionary order (a proper prefix sorts first).
Prefix codes are frozensets of such strings.
"""
from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from itertools import islice, product, takewhile
from typing import Iterable, Iterator

LETTERS = "abcdefghijklmnopqrstuvwxyz"
EMPTY_WORD_TOKEN = "-"
DEFAULT_BUDGET = 2**20


class ThompsonError(Exception):
    pass


class AlphabetError(ThompsonError):
    pass


class RuleNotApplicable(ThompsonError):
    pass


class DomainError(ThompsonError):
    pass


class OrderViolation(ThompsonError):
    pass


class BudgetExceeded(ThompsonError):
    pass


class ParseError(ThompsonError):
    pass


class Budget:
    """Counts elementary evaluations and raises once the limit is crossed."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"evaluation budget of {self.limit} exceeded")


def alphabet(k: int) -> str:
    if not 2 <= k <= 26:
        raise AlphabetError(f"alphabet size must be between 2 and 26, got {k}")
    return LETTERS[:k]


def check_word(w: str, k: int) -> str:
    letters = alphabet(k)
    for ch in w:
        if ch not in letters:
            raise AlphabetError(f"letter {ch!r} is outside the {k}-letter alphabet")
    return w


def words_of_length(k: int, n: int) -> Iterator[str]:
    """All words of length n in dictionary order."""
    for t in product(alphabet(k), repeat=n):
        yield "".join(t)


def words_up_to(k: int, n: int) -> Iterator[str]:
    for m in range(n + 1):
        yield from words_of_length(k, m)


def dict_leq(u: str, v: str, k: int | None = None) -> bool:
    if k is not None:
        check_word(u, k)
        check_word(v, k)
    return u <= v


def prefix_in(w: str, S) -> str | None:
    """The member of S that is a prefix of w (unique when S is a prefix code)."""
    for i in range(len(w) + 1):
        if w[:i] in S:
            return w[:i]
    return None


def is_antichain(S: Iterable[str]) -> bool:
    S = sorted(set(S))
    # in sorted order a prefix is immediately followed by its extensions
    return all(not S[i + 1].startswith(S[i]) for i in range(len(S) - 1))


def make_code(words: Iterable[str], k: int) -> frozenset[str]:
    code = frozenset(check_word(w, k) for w in words)
    if not is_antichain(code):
        raise DomainError(f"{format_code(code)} is not a prefix code")
    return code


def prune(S: Iterable[str]) -> frozenset[str]:
    kept: set[str] = set()
    for s in sorted(set(S), key=len):
        if prefix_in(s, kept) is None:
            kept.add(s)
    return frozenset(kept)


def strict_prefixes(P: Iterable[str]) -> frozenset[str]:
    return frozenset(p[:i] for p in P for i in range(len(p)))


def extensions_agree(u: str, v: str, value, open_words: frozenset[str], k: int) -> bool:
    """value(u s) == value(v s) for every word s.

    Outside ``open_words`` the value must be shift-determined: value(w s) is
    a fixed injective function of (value(w), s).  The descent stops as soon
    as both sides reach such a word.
    """
    letters = alphabet(k)
    stack = [(u, v)]
    while stack:
        u, v = stack.pop()
        if u not in open_words and v not in open_words:
            if value(u) != value(v):
                return False
        else:
            stack.extend((u + a, v + a) for a in letters)
    return True


def code_depth(P: Iterable[str]) -> int:
    return max((len(p) for p in P), default=0)


def kraft_sum(P: Iterable[str], k: int) -> Fraction:
    return sum((Fraction(1, k ** len(p)) for p in P), Fraction(0))


def _saturated(root: str, leaves: Iterable[str], k: int) -> bool:
    """Every vertex strictly between root and a leaf has all k children."""
    leaves = set(leaves)
    vertices = {leaf[:i] for leaf in leaves for i in range(len(root), len(leaf) + 1)}
    letters = alphabet(k)
    for v in vertices:
        if v not in leaves and any(v + a not in vertices for a in letters):
            return False
    return True


def is_maximal_saturated(P: Iterable[str], k: int) -> bool:
    P = frozenset(P)
    return bool(P) and _saturated("", P, k)


def is_maximal_kraft(P: Iterable[str], k: int) -> bool:
    return kraft_sum(P, k) == 1


def is_maximal(P: Iterable[str], k: int) -> bool:
    return is_maximal_saturated(P, k)


def ideal_intersection(P: Iterable[str], Q: Iterable[str]) -> frozenset[str]:
    P, Q = frozenset(P), frozenset(Q)
    inter = {p for p in P if prefix_in(p, Q) is not None}
    inter |= {q for q in Q if prefix_in(q, P) is not None}
    return prune(inter)


def complement_code(P: Iterable[str], Q: Iterable[str], k: int) -> frozenset[str]:
    """Code C with CA* disjoint from PA* and CA* u PA* end-equal to QA*."""
    P, Q = frozenset(P), frozenset(Q)
    if not P:
        raise DomainError("complement needs a nonempty prefix code")
    if any(prefix_in(p, Q) is None for p in P):
        raise DomainError(f"{format_code(P)}A* is not contained in {format_code(Q)}A*")
    depth = max(code_depth(P), code_depth(Q))
    out = set()
    for q in Q:
        for w in words_of_length(k, depth - len(q)):
            if prefix_in(q + w, P) is None:
                out.add(q + w)
    return frozenset(out)


def ends_subset(Q: Iterable[str], P: Iterable[str], k: int) -> bool:
    """ends(QA*) is contained in ends(PA*)."""
    P = frozenset(P)
    ordered = sorted(P)
    for y in Q:
        if prefix_in(y, P) is not None:
            continue
        leaves = list(takewhile(lambda p: p.startswith(y), islice(ordered, bisect_left(ordered, y), None)))
        if not leaves or not _saturated(y, leaves, k):
            return False
    return True


def ends_equal(P: Iterable[str], Q: Iterable[str], k: int) -> bool:
    P, Q = frozenset(P), frozenset(Q)
    return ends_subset(P, Q, k) and ends_subset(Q, P, k)


def code_restrict_step(P: Iterable[str], c: str, k: int) -> frozenset[str]:
    P = frozenset(P)
    if c not in P:
        raise RuleNotApplicable(f"{format_word(c)} is not in {format_code(P)}")
    return (P - {c}) | {c + a for a in alphabet(k)}


def code_extend_step(P: Iterable[str], c: str, k: int) -> frozenset[str]:
    P = frozenset(P)
    children = {c + a for a in alphabet(k)}
    if not children <= P:
        raise RuleNotApplicable(f"{format_code(children)} is not inside {format_code(P)}")
    return (P - children) | {c}


def all_prefix_codes(k: int, depth: int, root: str = "") -> list[frozenset[str]]:
    """Every prefix code inside root.A^{<=depth}, the empty code included."""
    if depth == 0:
        return [frozenset(), frozenset({root})]
    out = [frozenset(), frozenset({root})]
    subs = [all_prefix_codes(k, depth - 1, root + a) for a in alphabet(k)]
    for parts in product(*subs):
        code = frozenset().union(*parts)
        if code:
            out.append(code)
    return out


def format_word(w: str) -> str:
    return w if w else EMPTY_WORD_TOKEN


def parse_word(token: str, k: int) -> str:
    token = token.strip()
    if token == EMPTY_WORD_TOKEN:
        return ""
    if not token:
        raise ParseError("empty word token (use '-' for the empty word)")
    try:
        return check_word(token, k)
    except AlphabetError as e:
        raise ParseError(str(e)) from None


def format_code(P: Iterable[str]) -> str:
    return "{" + ",".join(format_word(w) for w in sorted(P)) + "}"


def parse_code(text: str, k: int) -> frozenset[str]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"prefix code must be written in braces, got {text!r}")
    body = text[1:-1].strip()
    words = [parse_word(t, k) for t in body.split(",")] if body else []
    try:
        return make_code(words, k)
    except DomainError as e:
        raise ParseError(str(e)) from None
