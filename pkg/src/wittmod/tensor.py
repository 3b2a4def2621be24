"""Tensor-field modules over the rank-n Witt algebra.

The Witt algebra here is the Lie algebra of derivations of Laurent
polynomials in n variables, spanned by D(u, r) = t^r sum_k u_k d_k with
bracket [D(u,r), D(v,s)] = D((u|s)v - (v|r)u, r+s).

Given a gl_n input module V on which the identity matrix acts as a
scalar, the space V tensor the Laurent algebra carries the action

    D(u, r) v(m) = ((u | m + alpha) v + (r'u) v)(m + r)

where (r'u) is the matrix with entries r_i u_j, so (r'u)v expands to
sum_{i,j} r_i u_j E_ij v.  Elements are finite formal sums of basis
symbols v_idx(m) with exact coefficients.  Actions never truncate;
window clipping is always an explicit caller-side step.
"""

from __future__ import annotations

from typing import Sequence

from .glmod import GlVector
from .scalars import coeff_is_zero, coeff_to_text, parse_scalar


class WittGenerator:
    """D(u, r): direction vector u over the coefficient field, lattice shift r."""

    __slots__ = ("u", "r")

    def __init__(self, u: Sequence, r: Sequence[int]):
        self.u = tuple(u)
        self.r = tuple(int(x) for x in r)
        if len(self.u) != len(self.r):
            raise ValueError("direction and shift lengths differ")

    def __repr__(self):
        return f"D({self.u}, {self.r})"


class ModuleElement:
    """Finite sum of basis symbols v_idx(m); (index, lattice point) -> coeff."""

    __slots__ = ("alpha", "terms")

    def __init__(self, alpha: Sequence, terms=None):
        self.alpha = tuple(alpha)
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                if not coeff_is_zero(coeff):
                    idx, m = key
                    self.terms[(idx, tuple(m))] = coeff

    @classmethod
    def basis(cls, alpha, idx, m, coeff=1) -> "ModuleElement":
        return cls(alpha, {(idx, tuple(m)): coeff})

    @classmethod
    def zero(cls, alpha) -> "ModuleElement":
        return cls(alpha)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            s = out.get(key, 0) + coeff
            if coeff_is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        res = ModuleElement.__new__(ModuleElement)
        res.alpha = self.alpha
        res.terms = out
        return res

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + other.scale(-1)

    def __neg__(self) -> "ModuleElement":
        return self.scale(-1)

    def scale(self, coeff) -> "ModuleElement":
        res = ModuleElement.__new__(ModuleElement)
        res.alpha = self.alpha
        if coeff_is_zero(coeff):
            res.terms = {}
        else:
            res.terms = {key: c * coeff for key, c in self.terms.items()}
        return res

    def coefficient(self, idx, m):
        return self.terms.get((idx, tuple(m)), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def support_points(self) -> set:
        return {m for (_, m) in self.terms}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleElement)
            and self.alpha == other.alpha
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "ModuleElement(0)"
        body = " + ".join(
            f"({coeff_to_text(c)})*v[{idx}]{m}" for (idx, m), c in self.sorted_terms()
        )
        return f"ModuleElement({body})"


def act_witt(D: WittGenerator, x: ModuleElement, module) -> ModuleElement:
    """Apply D(u, r); linear in x, support shifts by r."""
    n = len(x.alpha)
    if len(D.u) != n:
        raise ValueError(f"generator dimension {len(D.u)} does not match n={n}")
    out = ModuleElement.zero(x.alpha)
    nz = [(i, ri) for i, ri in enumerate(D.r) if ri]
    for (idx, m), coeff in x.terms.items():
        target = tuple(a + b for a, b in zip(m, D.r))
        weight = 0
        for k in range(n):
            if not coeff_is_zero(D.u[k]):
                weight = weight + D.u[k] * (m[k] + x.alpha[k])
        acc = GlVector.basis(idx).scale(weight)
        for i, ri in nz:
            for j in range(n):
                uj = D.u[j]
                if coeff_is_zero(uj):
                    continue
                acc = acc + module.act(i + 1, j + 1, GlVector.basis(idx)).scale(ri * uj)
        add = {}
        for p, c in acc.terms.items():
            add[(p, target)] = c * coeff
        out = out + ModuleElement(x.alpha, add)
    return out


def witt_bracket_residual(u, r, v, s, x: ModuleElement, module) -> ModuleElement:
    """[D(u,r), D(v,s)]x - D((u|s)v - (v|r)u, r+s)x; zero iff the law holds."""
    Du = WittGenerator(u, r)
    Dv = WittGenerator(v, s)
    us = 0
    vr = 0
    for k in range(len(u)):
        us = us + u[k] * s[k]
        vr = vr + v[k] * r[k]
    w = tuple(us * v[k] - vr * u[k] for k in range(len(u)))
    rs = tuple(a + b for a, b in zip(r, s))
    lhs = act_witt(Du, act_witt(Dv, x, module), module) - act_witt(
        Dv, act_witt(Du, x, module), module
    )
    return lhs - act_witt(WittGenerator(w, rs), x, module)


def witt_bracket_check(u, r, v, s, x: ModuleElement, module) -> dict:
    res = witt_bracket_residual(u, r, v, s, x, module)
    return {
        "ok": res.is_zero(),
        "residual": element_to_json(res, module) if not res.is_zero() else None,
    }


def jacobi_residual(gens, x: ModuleElement, module) -> ModuleElement:
    """Cyclic sum of [D1, [D2, D3]] applied to x; zero for a Lie action."""

    def bracket_gen(a: WittGenerator, b: WittGenerator) -> WittGenerator:
        ab = 0
        ba = 0
        for k in range(len(a.u)):
            ab = ab + a.u[k] * b.r[k]
            ba = ba + b.u[k] * a.r[k]
        w = tuple(ab * b.u[k] - ba * a.u[k] for k in range(len(a.u)))
        return WittGenerator(w, tuple(p + q for p, q in zip(a.r, b.r)))

    total = ModuleElement.zero(x.alpha)
    d1, d2, d3 = gens
    for a, b, c in ((d1, d2, d3), (d2, d3, d1), (d3, d1, d2)):
        inner = bracket_gen(b, c)
        total = total + act_witt(a, act_witt(inner, x, module), module)
        total = total - act_witt(inner, act_witt(a, x, module), module)
    return total


# -- de Rham differential ----------------------------------------------


def de_rham_differential(x: ModuleElement, n: int, k: int, wedge_k, wedge_k1) -> ModuleElement:
    """Degree +1 map on twisted forms:

        d(e_S tensor t^m) = sum_{j not in S} (m_j + alpha_j) e_j ^ e_S tensor t^m

    ``wedge_k`` and ``wedge_k1`` are the wedge-power modules carrying the
    source and target bases; the lattice point never moves.
    """
    if k >= n:
        raise ValueError("top-degree forms have no differential")
    pos1 = {s: t for t, s in enumerate(wedge_k1.basis_labels)}
    out = {}
    for (idx, m), coeff in x.terms.items():
        subset = wedge_k.basis_labels[idx]
        for j in range(1, n + 1):
            if j in subset:
                continue
            weight = (m[j - 1] + x.alpha[j - 1]) * coeff
            if coeff_is_zero(weight):
                continue
            below = sum(1 for t in subset if t < j)
            sign = -1 if below % 2 else 1
            target = tuple(sorted(subset + (j,)))
            key = (pos1[target], m)
            s = out.get(key, 0) + weight * sign
            if coeff_is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
    return ModuleElement(x.alpha, out)


def verify_d_intertwines(u, r, alpha, box, n: int, k: int, wedges) -> dict:
    """Residuals of d(D(u,r)x) - D(u,r)(d x) over monomial generators.

    ``box`` is an iterable of lattice points m; x runs over e_S tensor t^m
    for every wedge-degree-k basis subset S.
    """
    D = WittGenerator(u, r)
    src, dst = wedges[k], wedges[k + 1]
    failures = []
    count = 0
    for m in box:
        for idx in range(src.dim):
            x = ModuleElement.basis(alpha, idx, m)
            lhs = de_rham_differential(act_witt(D, x, src), n, k, src, dst)
            rhs = act_witt(D, de_rham_differential(x, n, k, src, dst), dst)
            count += 1
            res = lhs - rhs
            if not res.is_zero():
                failures.append(
                    {
                        "generator": repr(D),
                        "basis": {"index": src.label(idx), "m": list(m)},
                        "residual": element_to_json(res, dst),
                    }
                )
    return {"ok": not failures, "checked": count, "failures": failures}


# -- JSON element format -------------------------------------------------


def element_to_json(x: ModuleElement, module=None) -> dict:
    terms = []
    for (idx, m), coeff in x.sorted_terms():
        label = module.label(idx) if module is not None else idx
        terms.append({"index": label, "r": list(m), "coeff": coeff_to_text(coeff)})
    return {"alpha": [coeff_to_text(a) for a in x.alpha], "terms": terms}


def _demote(x):
    # constants round-trip as plain rationals so numeric elements stay numeric
    return x.const_value() if x.is_const() else x


def element_from_json(doc: dict, module=None) -> ModuleElement:
    alpha = tuple(_demote(parse_scalar(s)) for s in doc["alpha"])
    terms = {}
    for entry in doc["terms"]:
        label = entry["index"]
        if isinstance(label, list):
            if module is None or module.basis_labels is None:
                raise ValueError("subset index requires a labeled module")
            idx = module.basis_labels.index(tuple(label))
        else:
            idx = int(label)
        key = (idx, tuple(int(v) for v in entry["r"]))
        coeff = _demote(parse_scalar(entry["coeff"]))
        terms[key] = terms[key] + coeff if key in terms else coeff
    return ModuleElement(alpha, terms)
