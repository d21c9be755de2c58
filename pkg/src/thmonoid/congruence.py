"""Prefix code congruences: a partition of a prefix code, extended by p w ~ q w."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import (
    AlphabetError,
    DomainError,
    ParseError,
    RuleNotApplicable,
    alphabet,
    check_word,
    code_depth,
    ends_subset,
    extensions_agree,
    strict_prefixes,
    format_word,
    ideal_intersection,
    prune,
    is_antichain,
    parse_word,
    prefix_in,
)
from .hom import (
    Hom,
    content_lines,
    fibers,
    pc_form,
    parse_alphabet_line,
)


@dataclass(frozen=True)
class Congruence:
    k: int
    blocks: tuple[tuple[str, ...], ...]

    @classmethod
    def from_blocks(cls, k: int, blocks: Iterable[Iterable[str]]) -> "Congruence":
        canon = []
        seen: set[str] = set()
        for b in blocks:
            b = tuple(sorted(set(check_word(w, k) for w in b)))
            if not b:
                raise DomainError("congruence blocks must be nonempty")
            if seen & set(b):
                raise DomainError("congruence blocks overlap")
            seen |= set(b)
            canon.append(b)
        if not is_antichain(seen):
            raise DomainError("congruence domain is not a prefix code")
        return cls(k, tuple(sorted(canon)))

    @cached_property
    def block_index(self) -> dict[str, int]:
        return {w: i for i, b in enumerate(self.blocks) for w in b}

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.block_index)

    def block_of(self, w: str) -> tuple[str, ...]:
        return self.blocks[self.block_index[w]]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(format_word(w) for w in b) + "}" for b in self.blocks) + "}"


def _same_alphabet(c1: Congruence, c2: Congruence) -> int:
    if c1.k != c2.k:
        raise AlphabetError(f"mismatched alphabets {c1.k} and {c2.k}")
    return c1.k


def locate(c: Congruence, u: str) -> tuple[int, str] | None:
    """(block index, tail) for u = p.tail with p in the domain code."""
    p = prefix_in(u, c.block_index)
    if p is None:
        return None
    return c.block_index[p], u[len(p):]


def trace(c: Congruence, u: str, v: str) -> bool | None:
    lu, lv = locate(c, u), locate(c, v)
    if lu is None or lv is None:
        return None
    return lu == lv


def cong_restrict_step(c: Congruence, block: Iterable[str]) -> Congruence:
    block = tuple(sorted(block))
    if block not in c.blocks:
        raise RuleNotApplicable(f"{sorted(block)} is not a block of {c}")
    rest = [b for b in c.blocks if b != block]
    rest += [[w + a for w in block] for a in alphabet(c.k)]
    return Congruence.from_blocks(c.k, rest)


def cong_extend_step(c: Congruence, base: Iterable[str]) -> Congruence:
    base = sorted(set(base))
    children = [tuple(sorted(w + a for w in base)) for a in alphabet(c.k)]
    if not base or any(ch not in c.blocks for ch in children):
        raise RuleNotApplicable(f"the blocks {sorted(base)}.a are not all present in {c}")
    rest = [b for b in c.blocks if b not in children] + [base]
    return Congruence.from_blocks(c.k, rest)


def cong_max(c: Congruence) -> Congruence:
    first = alphabet(c.k)[0]
    current = c
    changed = True
    while changed:
        changed = False
        present = set(current.blocks)
        for b in current.blocks:
            if not all(w.endswith(first) for w in b):
                continue
            base = [w[:-1] for w in b]
            if all(tuple(sorted(x + a for x in base)) in present for a in alphabet(c.k)):
                current = cong_extend_step(current, base)
                changed = True
                break
    return current


def cong_ess_equal(c1: Congruence, c2: Congruence) -> bool:
    _same_alphabet(c1, c2)
    return cong_max(c1) == cong_max(c2)


def refines_end(c2: Congruence, c1: Congruence) -> bool:
    """c2 <=_end c1: Dom(c2) sits inside Dom(c1) on ends, and c1-related ends
    of Dom(c2) stay c2-related.

    For p, q in one c1-block and every extension s, p.s and q.s land in the
    same c2-block with the same tail, or both fall outside Dom(c2).
    """
    k = _same_alphabet(c1, c2)
    if not ends_subset(c2.domain, c1.domain, k):
        return False
    open_words = strict_prefixes(c2.domain)
    for block in c1.blocks:
        for q in block[1:]:
            if not extensions_agree(block[0], q, lambda w: locate(c2, w), open_words, k):
                return False
    return True


def cong_meet(c1: Congruence, c2: Congruence) -> Congruence:
    k = _same_alphabet(c1, c2)
    groups: dict[tuple, list[str]] = {}
    for w in ideal_intersection(c1.domain, c2.domain):
        groups.setdefault((locate(c1, w), locate(c2, w)), []).append(w)
    return cong_max(Congruence.from_blocks(k, groups.values()))


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def cong_join(c1: Congruence, c2: Congruence, depth_limit: int | None = None) -> Congruence:
    """Transitive closure of c1 u c2 on Dom(c1) u Dom(c2).

    The domain code is refined until every block mate of a code word is
    itself a code word; then a union-find pass closes the relation.  The
    closure need not be finitely generated (its classes can be infinite),
    in which case the refinement runs past ``depth_limit`` and fails.
    """
    k = _same_alphabet(c1, c2)
    letters = alphabet(k)
    gens = [c for c in (c1, c2) if c.blocks]
    base = set().union(*(c.domain for c in gens)) if gens else set()
    if depth_limit is None:
        depth_limit = 4 * (code_depth(c1.domain) + code_depth(c2.domain)) + 4

    def mates(w: str):
        for c in gens:
            loc = locate(c, w)
            if loc is not None:
                b, tail = loc
                for q in c.blocks[b]:
                    yield q + tail

    code = set(prune(base))
    while True:
        target = None
        for w in sorted(code):
            if any(p != w and p.startswith(w) for p in base):
                target = w
                break
            for v in mates(w):
                if v not in code:
                    owner = prefix_in(v, code)
                    # refine the code word above v, or w itself when v lies above the code
                    target = owner if owner is not None else w
                    break
            if target is not None:
                break
        if target is None:
            break
        if len(target) >= depth_limit:
            raise DomainError("join is not generated by a prefix code within the depth limit")
        code.discard(target)
        code.update(target + a for a in letters)
    uf = _UnionFind()
    for w in code:
        uf.find(w)
        for v in mates(w):
            uf.union(w, v)
    groups: dict[str, list[str]] = {}
    for w in code:
        groups.setdefault(uf.find(w), []).append(w)
    return cong_max(Congruence.from_blocks(k, groups.values()))


def part(phi: Hom) -> Congruence:
    """Fibers of the prefix-code-preserving representative."""
    return Congruence.from_blocks(phi.k, fibers(pc_form(phi)).values())


def func(c: Congruence, j: int) -> Hom:
    if j not in (0, 1):
        raise DomainError(f"func index must be 0 or 1, got {j}")
    pick = min if j == 0 else max
    return Hom.from_pairs(c.k, ((w, pick(b)) for b in c.blocks for w in b))


def format_cong(c: Congruence) -> str:
    lines = [f"alphabet k={c.k}"]
    lines += ["block " + ", ".join(format_word(w) for w in b) for b in c.blocks]
    return "\n".join(lines) + "\n"


def parse_cong(text: str) -> Congruence:
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty .cong input")
    k = parse_alphabet_line(lines[0])
    blocks = []
    for ln in lines[1:]:
        if not ln.startswith("block "):
            raise ParseError(f"expected 'block w1, w2, ...', got {ln!r}")
        blocks.append([parse_word(t, k) for t in ln[6:].split(",")])
    try:
        return Congruence.from_blocks(k, blocks)
    except DomainError as e:
        raise ParseError(str(e)) from None
