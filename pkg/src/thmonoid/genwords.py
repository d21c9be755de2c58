"""Elements written as words over named tables and letter transpositions.

A GenWord is applied right to left.  ``apply`` realises the composite
without any extension, so its domain can be smaller than that of the
max-extended table returned by ``expand_to_table``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .core import (
    Budget,
    DomainError,
    ParseError,
    alphabet,
    code_depth,
    is_maximal_kraft,
    prefix_in,
    prune,
    strict_prefixes,
    words_of_length,
    words_up_to,
)
from .hom import (
    Hom,
    compose_raw,
    content_lines,
    depth,
    evaluate,
    identity,
    image_code,
    max_extend,
    parse_alphabet_line,
    parse_hom,
)


@dataclass(frozen=True)
class Gen:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Tau:
    i: int

    def __post_init__(self):
        if self.i < 1:
            raise DomainError(f"transposition index must be >= 1, got {self.i}")

    def __str__(self) -> str:
        return f"tau{self.i}"


@dataclass
class GammaSet:
    k: int
    gens: dict[str, Hom] = field(default_factory=dict)

    def __post_init__(self):
        alphabet(self.k)
        for name, h in self.gens.items():
            if h.k != self.k:
                raise DomainError(f"generator {name} uses alphabet {h.k}, expected {self.k}")

    @property
    def c(self) -> int:
        """Longest word over all generator tables, at least 1."""
        return max([1] + [depth(h) for h in self.gens.values()])


@dataclass(frozen=True)
class GenWord:
    gamma: GammaSet
    atoms: tuple

    def __post_init__(self):
        for a in self.atoms:
            if isinstance(a, Gen) and a.name not in self.gamma.gens:
                raise DomainError(f"unknown generator {a.name}")

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.atoms) or "(empty)"


@lru_cache(maxsize=None)
def tau_table(k: int, i: int) -> Hom:
    """u l1 l2 -> u l2 l1 on A^{i+1}."""
    return Hom.from_pairs(k, ((w, w[: i - 1] + w[i] + w[i - 1]) for w in words_of_length(k, i + 1)))


def atom_table(gamma: GammaSet, atom) -> Hom:
    if isinstance(atom, Tau):
        return tau_table(gamma.k, atom.i)
    return gamma.gens[atom.name]


def atom_length(atom) -> int:
    return atom.i + 1 if isinstance(atom, Tau) else 1


def word_length(w: GenWord) -> int:
    return sum(atom_length(a) for a in w.atoms)


def depth_bound(w: GenWord) -> int:
    return w.gamma.c * word_length(w)


def apply(w: GenWord, z: str) -> str | None:
    for atom in reversed(w.atoms):
        z = evaluate(atom_table(w.gamma, atom), z)
        if z is None:
            return None
    return z


@lru_cache(maxsize=None)
def _open_words(table: Hom) -> frozenset[str]:
    return strict_prefixes(table.domain)


def extendable(w: GenWord, z: str) -> bool:
    """Some proper extension of z could still enter the domain.

    Steps that are defined on z act as prefix substitutions on z.s, so the
    first undefined step sees u.s; if u is not a strict prefix of a domain
    word of that step, no s helps.
    """
    for atom in reversed(w.atoms):
        table = atom_table(w.gamma, atom)
        out = evaluate(table, z)
        if out is None:
            return z in _open_words(table)
        z = out
    return False


def expand_raw(w: GenWord, budget: Budget | None = None) -> Hom:
    """The composite table before extension; its action equals ``apply``."""
    budget = budget or Budget()
    out = identity(w.gamma.k)
    for atom in reversed(w.atoms):
        out = compose_raw(atom_table(w.gamma, atom), out)
        budget.spend(len(out))
    return out


def expand_to_table(w: GenWord, budget: Budget | None = None) -> Hom:
    raw = expand_raw(w, budget)
    out = max_extend(raw)
    bound = depth_bound(w)
    assert code_depth(raw.domain) <= bound and code_depth(raw.images) <= bound, "depth bound violated"
    assert code_depth(out.domain) <= bound and code_depth(image_code(out)) <= bound, "depth bound violated"
    return out


def dom_member(w: GenWord, z: str) -> bool:
    return apply(w, z) is not None


def domc_member(w: GenWord, z: str) -> bool:
    return dom_member(w, z) and (z == "" or not dom_member(w, z[:-1]))


def domain_code(w: GenWord, max_len: int, budget: Budget) -> Iterator[tuple[str, str]]:
    """(x, apply(w, x)) for the minimal domain words x of length <= max_len.

    Minimal domain words never exceed the depth bound c|w|, so callers pass
    that bound and the search below it is exhaustive.
    """
    letters = alphabet(w.gamma.k)
    stack = [""]
    while stack:
        x = stack.pop()
        budget.spend()
        y = apply(w, x)
        if y is not None:
            yield x, y
        elif len(x) < max_len and extendable(w, x):
            stack.extend(x + a for a in reversed(letters))


def image_member_bruteforce(w: GenWord, z: str, budget: Budget | None = None) -> bool:
    """Some x with |x| <= |z| + c|w| has apply(w, x) = z.

    Once x is in the domain, x.s maps to apply(w, x).s, so the search
    stops descending there.
    """
    budget = budget or Budget()
    bound = len(z) + depth_bound(w)
    for x, y in domain_code(w, depth_bound(w), budget):
        if z.startswith(y) and len(x) + len(z) - len(y) <= bound:
            return True
    return False


def is_surjective_program(w: GenWord, budget: Budget | None = None) -> bool:
    """Every y in A^N is a prefix of some apply(w, x) with |x| <= 2N, N = c|w|.

    The search range for x is 2N rather than N: a domain word may be
    longer than its image, and the preimage of a length-N word can then
    need up to l(domC) + N letters.
    """
    budget = budget or Budget()
    k = w.gamma.k
    n = depth_bound(w)
    reach = 2 * n
    covered: set[str] = set()
    for x, y in domain_code(w, n, budget):
        room = reach - len(x)
        if len(y) >= n:
            covered.add(y[:n])
        elif n - len(y) <= room:
            covered.add(y)
    # every y in A^N has a prefix in covered iff the pruned set is a maximal code
    return is_maximal_kraft(prune(covered), k)


def _minimal_image_domain(w: GenWord, budget: Budget) -> list[tuple[str, str]]:
    """Domain words whose image has no other image as a strict prefix."""
    base = list(domain_code(w, depth_bound(w), budget))
    minimal = prune(y for _, y in base)
    return [(x, y) for x, y in base if y in minimal]


def r_leq_pi2(psi: GenWord, phi: GenWord, budget: Budget | None = None) -> bool:
    """psi <=_R phi by the bounded forall-forall-exists formula.

    For all x in domC(psi), z in A^{<=l}, r in D:
      exists s, t, x_1..x_k in D:
        phi(s) pref psi(x)
        or ( psi(x) pref phi(t)
             and ( not [psi(x) pref z spref phi(r)]
                   or AND_i [psi(x) pref z a_i pref phi(x_i)] ) )
    where D is the set of domain words of phi with minimal images, so that
    phi(D) = imC(phi) is a prefix code generating Im(phi), and l = l(imC phi).
    """
    budget = budget or Budget()
    k = phi.gamma.k
    letters = alphabet(k)
    imgs = {y for _, y in _minimal_image_domain(phi, budget)}
    strict = {y[:i] for y in imgs for i in range(len(y))}
    reachable = strict | imgs
    for _, y in domain_code(psi, depth_bound(psi), budget):
        budget.spend()
        if prefix_in(y, imgs) is not None:
            continue
        if y not in reachable:
            return False
        # z with y.z outside the strict prefixes make the implication vacuous
        for zz in strict:
            budget.spend()
            if zz.startswith(y) and not all(zz + a in reachable for a in letters):
                return False
    return True


def r_leq_pi2_existential_r(psi: GenWord, phi: GenWord, budget: Budget | None = None) -> bool:
    """Variant with r existential and strict-prefix children, kept to show where it fails:

      for all x in domC(psi), z in A^{<=l}: exists s, r, x_1..x_k in domC(phi):
        phi(s) pref psi(x) or not [psi(x) pref z spref phi(r)]
        or AND_i [psi(x) pref z a_i spref phi(x_i)]
    """
    budget = budget or Budget()
    k = phi.gamma.k
    letters = alphabet(k)
    dom_phi = list(domain_code(phi, depth_bound(phi), budget))
    imgs = [y for _, y in dom_phi]
    top = max((len(y) for y in imgs), default=0)

    def spref(u: str, v: str) -> bool:
        return len(u) < len(v) and v.startswith(u)

    for _, y in domain_code(psi, depth_bound(psi), budget):
        for z in words_up_to(k, top):
            budget.spend(len(imgs))
            if any(y.startswith(s) for s in imgs):
                continue
            if any(not (z.startswith(y) and spref(z, r)) for r in imgs):
                continue
            if all(any(z.startswith(y) and spref(z + a, xi) for xi in imgs) for a in letters):
                continue
            return False
    return True


def _covers(y: str, room: int, code: frozenset[str], letters: str) -> bool:
    """Every y.s with |s| = room has a prefix in code."""
    if prefix_in(y, code) is not None:
        return True
    if room == 0 or not any(p.startswith(y) for p in code):
        return False
    return all(_covers(y + a, room - 1, code, letters) for a in letters)


def r_upper_bound_check(phi: GenWord, alpha: Hom, budget: Budget | None = None) -> bool:
    """For all x in A^N: x not in Dom(phi) or phi(x) in imC(alpha)A*,
    with N = l(domC phi) + l(imC alpha)."""
    budget = budget or Budget()
    if alpha.k != phi.gamma.k:
        raise DomainError("alphabet mismatch between word and bound")
    letters = alphabet(alpha.k)
    code = image_code(alpha)
    dom = list(domain_code(phi, depth_bound(phi), budget))
    n = code_depth(x for x, _ in dom) + code_depth(code)
    for x, y in dom:
        budget.spend()
        if not _covers(y, n - len(x), code, letters):
            return False
    return True


def format_gen(w: GenWord, files: dict[str, str]) -> str:
    lines = [f"alphabet k={w.gamma.k}"]
    lines += [f"gamma {files[name]} as {name}" for name in sorted(w.gamma.gens)]
    lines.append("word: " + " ".join(str(a) for a in w.atoms))
    lines.append("apply-order: right-to-left")
    return "\n".join(lines) + "\n"


def parse_atom(token: str):
    for prefix in ("tau", "τ"):
        if token.startswith(prefix) and token[len(prefix):].isdigit():
            return Tau(int(token[len(prefix):]))
    return Gen(token)


def parse_gen(text: str, base_dir: Path | str = ".") -> GenWord:
    base_dir = Path(base_dir)
    k = None
    gens: dict[str, Hom] = {}
    atoms = None
    for ln in content_lines(text):
        if ln.startswith("alphabet"):
            k = parse_alphabet_line(ln)
        elif ln.startswith("gamma "):
            parts = ln.split()
            if len(parts) != 4 or parts[2] != "as":
                raise ParseError(f"expected 'gamma <file.hom> as <NAME>', got {ln!r}")
            path = base_dir / parts[1]
            try:
                gens[parts[3]] = parse_hom(path.read_text())
            except OSError as e:
                raise ParseError(f"cannot read {path}: {e.strerror}") from None
        elif ln.startswith("word:"):
            atoms = tuple(parse_atom(t) for t in ln[5:].split())
        elif ln.startswith("apply-order:"):
            if ln.split(":", 1)[1].strip() != "right-to-left":
                raise ParseError("only 'apply-order: right-to-left' is supported")
        else:
            raise ParseError(f"unrecognised .gen line {ln!r}")
    if atoms is None:
        raise ParseError("missing 'word:' line")
    ks = {h.k for h in gens.values()} | ({k} if k else set())
    if len(ks) != 1:
        raise ParseError("cannot determine a single alphabet for the word")
    try:
        return GenWord(GammaSet(ks.pop(), gens), atoms)
    except DomainError as e:
        raise ParseError(str(e)) from None
