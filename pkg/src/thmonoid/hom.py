"""Right-ideal homomorphisms given by finite tables, and their normal forms.

A table maps the words of a prefix code x_i to words y_i and acts by
x_i w -> y_i w.  Two tables denote the same monoid element exactly when
their maximal extensions coincide, so ``max_extend`` is the canonical form.
"""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import (
    DomainError,
    ParseError,
    RuleNotApplicable,
    AlphabetError,
    alphabet,
    check_word,
    code_depth,
    format_word,
    is_antichain,
    parse_word,
    prefix_in,
    prune,
    words_of_length,
)


@dataclass(frozen=True)
class Hom:
    k: int
    table: tuple[tuple[str, str], ...]

    @classmethod
    def from_pairs(cls, k: int, pairs: Iterable[tuple[str, str]]) -> "Hom":
        mapping: dict[str, str] = {}
        for x, y in pairs:
            check_word(x, k)
            check_word(y, k)
            if x in mapping and mapping[x] != y:
                raise DomainError(f"domain word {format_word(x)} mapped twice")
            mapping[x] = y
        if not is_antichain(mapping):
            raise DomainError("domain words do not form a prefix code")
        return cls(k, tuple(sorted(mapping.items())))

    @classmethod
    def from_dict(cls, k: int, mapping: dict[str, str]) -> "Hom":
        return cls.from_pairs(k, mapping.items())

    @cached_property
    def mapping(self) -> dict[str, str]:
        return dict(self.table)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.mapping)

    @property
    def images(self) -> list[str]:
        return [y for _, y in self.table]

    def __len__(self) -> int:
        return len(self.table)

    def __call__(self, w: str) -> str | None:
        return evaluate(self, w)

    def __str__(self) -> str:
        body = ", ".join(f"{format_word(x)}->{format_word(y)}" for x, y in self.table)
        return f"[{body}]"


def identity(k: int, code: Iterable[str] = ("",)) -> Hom:
    """The partial identity on codeA*."""
    return Hom.from_pairs(k, ((p, p) for p in code))


def zero(k: int) -> Hom:
    return Hom(k, ())


def same_alphabet(*homs: Hom) -> int:
    ks = {h.k for h in homs}
    if len(ks) != 1:
        raise AlphabetError(f"mismatched alphabets {sorted(ks)}")
    return ks.pop()


def depth(phi: Hom) -> int:
    """Longest word in the table, domain or image side."""
    return max(code_depth(phi.domain), code_depth(phi.images))


def evaluate(phi: Hom, w: str) -> str | None:
    m = phi.mapping
    for i in range(len(w) + 1):
        y = m.get(w[:i])
        if y is not None:
            return y + w[i:]
    return None


def _try_merge(table: dict[str, str], parent: str, letters: str) -> bool:
    ys = []
    for a in letters:
        y = table.get(parent + a)
        if y is None or not y.endswith(a):
            return False
        ys.append(y[:-1])
    if any(y != ys[0] for y in ys):
        return False
    for a in letters:
        del table[parent + a]
    table[parent] = ys[0]
    return True


def max_extend(phi: Hom, rng: random.Random | None = None) -> Hom:
    """Apply (xa_i, ya_i)_i -> (x, y) until no rule fires.

    With ``rng`` the next candidate is drawn at random, which is how
    confluence is exercised; the result does not depend on the order.
    """
    letters = alphabet(phi.k)
    table = dict(phi.table)
    pending = sorted({x[:-1] for x in table if x})
    if rng is not None:
        rng.shuffle(pending)
    queued = set(pending)
    while pending:
        if rng is not None:
            i = rng.randrange(len(pending))
            pending[i], pending[-1] = pending[-1], pending[i]
        parent = pending.pop()
        queued.discard(parent)
        if _try_merge(table, parent, letters) and parent and parent[:-1] not in queued:
            pending.append(parent[:-1])
            queued.add(parent[:-1])
    return Hom(phi.k, tuple(sorted(table.items())))


def restrict_step(phi: Hom, x: str) -> Hom:
    if x not in phi.mapping:
        raise RuleNotApplicable(f"{format_word(x)} is not a domain word of {phi}")
    table = dict(phi.table)
    y = table.pop(x)
    for a in alphabet(phi.k):
        table[x + a] = y + a
    return Hom(phi.k, tuple(sorted(table.items())))


def compose_raw(phi: Hom, psi: Hom) -> Hom:
    """Table of phi after psi, before any extension."""
    k = same_alphabet(phi, psi)
    out: dict[str, str] = {}
    pm = phi.mapping
    for x, y in psi.table:
        p = prefix_in(y, pm)
        if p is not None:
            out[x] = pm[p] + y[len(p):]
            continue
        for p, q in phi.table:
            if p.startswith(y):
                out[x + p[len(y):]] = q
    return Hom(k, tuple(sorted(out.items())))


def compose(phi: Hom, psi: Hom) -> Hom:
    """phi o psi (psi applied first), max-extended."""
    return max_extend(compose_raw(phi, psi))


def compose_all(*homs: Hom) -> Hom:
    """homs[0] o homs[1] o ... o homs[-1]."""
    out = homs[-1]
    for h in reversed(homs[:-1]):
        out = compose(h, out)
    return max_extend(out)


def eq_in_M(phi: Hom, psi: Hom) -> bool:
    same_alphabet(phi, psi)
    return max_extend(phi) == max_extend(psi)


def image_code(phi: Hom) -> frozenset[str]:
    return prune(phi.images)


def is_pc_preserving(phi: Hom) -> bool:
    return is_antichain(phi.images)


def restrict_to_pc_preserving(phi: Hom) -> Hom:
    """Level every image to the common length of the longest image."""
    target = code_depth(phi.images)
    out = []
    for x, y in phi.table:
        for w in words_of_length(phi.k, target - len(y)):
            out.append((x + w, y + w))
    return Hom(phi.k, tuple(sorted(out)))


def pc_form(phi: Hom) -> Hom:
    return phi if is_pc_preserving(phi) else restrict_to_pc_preserving(phi)


def fibers(phi: Hom) -> dict[str, list[str]]:
    """image word -> sorted domain words mapped to it."""
    out: dict[str, list[str]] = defaultdict(list)
    for x, y in phi.table:
        out[y].append(x)
    return dict(out)


def classwise_restrict(phi: Hom, y: str) -> Hom:
    """Restrict every entry of the class mapped to y at once."""
    letters = alphabet(phi.k)
    table = dict(phi.table)
    cls = [x for x, v in phi.table if v == y]
    if not cls:
        raise RuleNotApplicable(f"{format_word(y)} is not an image word of {phi}")
    for x in cls:
        del table[x]
        for a in letters:
            table[x + a] = y + a
    return Hom(phi.k, tuple(sorted(table.items())))


def max_extend_classwise(phi: Hom) -> Hom:
    if not is_pc_preserving(phi):
        raise DomainError(f"{phi} is not prefix-code preserving")
    letters = alphabet(phi.k)
    table = dict(phi.table)
    changed = True
    while changed:
        changed = False
        fib = defaultdict(set)
        for x, y in table.items():
            fib[y].add(x)
        for y in sorted({v[:-1] for v in fib if v}, key=len, reverse=True):
            bases = []
            for a in letters:
                cls = fib.get(y + a)
                if not cls or any(not x.endswith(a) for x in cls):
                    break
                bases.append({x[:-1] for x in cls})
            else:
                if all(b == bases[0] for b in bases):
                    for a in letters:
                        for x in fib[y + a]:
                            del table[x]
                    for x in bases[0]:
                        table[x] = y
                    changed = True
                    break
    return Hom(phi.k, tuple(sorted(table.items())))


def is_idempotent(phi: Hom) -> bool:
    return eq_in_M(compose(phi, phi), phi)


def is_idempotent_fast(phi: Hom) -> bool:
    """Fix every image word, padded far enough to reach the domain."""
    pad = code_depth(phi.domain)
    for y in set(phi.images):
        for w in words_of_length(phi.k, pad):
            if evaluate(phi, y + w) != y + w:
                return False
    return True


def inverse(phi: Hom) -> Hom:
    """An inverse chi with phi chi phi = phi and chi phi chi = chi."""
    if not phi.table:
        raise DomainError("the zero element has no inverse")
    best: dict[str, str] = {}
    for x, y in phi.table:
        if y not in best or x < best[y]:
            best[y] = x
    code = image_code(phi)
    return Hom(phi.k, tuple(sorted((y, best[y]) for y in code)))


def format_hom(phi: Hom) -> str:
    lines = [f"alphabet k={phi.k}"]
    lines += [f"map {format_word(x)} -> {format_word(y)}" for x, y in phi.table]
    return "\n".join(lines) + "\n"


def parse_alphabet_line(line: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != "alphabet" or not parts[1].startswith("k="):
        raise ParseError(f"expected 'alphabet k=<n>', got {line!r}")
    try:
        k = int(parts[1][2:])
        alphabet(k)
    except (ValueError, AlphabetError) as e:
        raise ParseError(f"bad alphabet line {line!r}: {e}") from None
    return k


def content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def parse_hom(text: str) -> Hom:
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty .hom input")
    k = parse_alphabet_line(lines[0])
    pairs = []
    for ln in lines[1:]:
        if not ln.startswith("map ") or "->" not in ln:
            raise ParseError(f"expected 'map <word> -> <word>', got {ln!r}")
        left, right = ln[4:].split("->", 1)
        pairs.append((parse_word(left, k), parse_word(right, k)))
    try:
        return Hom.from_pairs(k, pairs)
    except DomainError as e:
        raise ParseError(str(e)) from None
