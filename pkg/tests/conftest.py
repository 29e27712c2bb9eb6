"""Shared helpers: small brute-force oracles used to cross-check the
library, and a terminal summary hook for the acceptance report."""

import itertools

from schurring.perm import closure, identity


def is_color_automorphism(A, p):
    """Direct O(n^2) check that p preserves all Cayley colors of A."""
    n = A.n
    for x in range(n):
        for y in range(n):
            if A.class_of[(p[y] - p[x]) % n] != A.class_of[(y - x) % n]:
                return False
    return True


def brute_color_automorphisms(A):
    """All color automorphisms of A, by scanning Sym(n).  n <= 8 only."""
    return [
        p for p in itertools.permutations(range(A.n)) if is_color_automorphism(A, p)
    ]


def section_of_perm(g, block):
    """Action of g on residues mod block, or None if blocks are broken."""
    out = [-1] * block
    for x, y in enumerate(g):
        r, s = x % block, y % block
        if out[r] == -1:
            out[r] = s
        elif out[r] != s:
            return None
    return tuple(out)


def brute_wreath_elements(delta1, delta0, n, u, l):
    """The full element set of the canonical generalized wreath product,
    straight from the definition: pick f0 in delta0 and, for every coset
    of U, any element of delta1 whose section action matches the one f0
    forces on U/L.  Exponential; degrees <= 8 only."""
    ul, nl, nu = u // l, n // l, n // u
    e1 = closure(u, delta1.generators or [identity(u)])
    e0 = closure(nl, delta0.generators or [identity(nl)])
    by_section = {}
    for f in e1:
        by_section.setdefault(section_of_perm(f, ul), []).append(f)

    def forced_section(f0, x0):
        # what f0 does to the U/L-fibre over the coset x0 (residues mod nu)
        x0p = f0[x0 % nl] % nu
        t = []
        for z in range(ul):
            y = f0[(z * nu + x0) % nl]
            assert y % nu == x0p, "config must respect coset blocks"
            t.append(((y - x0p) % nl) // nu)
        return tuple(t)

    out = set()
    for f0 in e0:
        choices = []
        for x0 in range(nu):
            t = forced_section(f0, x0)
            choices.append(by_section.get(t, []))
        for family in itertools.product(*choices):
            g = [-1] * n
            for x0 in range(nu):
                x0p = f0[x0 % nl] % nu
                fx = family[x0]
                for a in range(u):
                    g[a * nu + x0] = fx[a] * nu + x0p
            out.add(tuple(g))
    return out


def sym_group_gens(n):
    """Generators of Sym(n) as tuples."""
    if n < 2:
        return []
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple(range(1, n)) + (0,)
    return [swap, cycle]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import sys

    mod = next(
        (
            m
            for name, m in sys.modules.items()
            if name.rsplit(".", 1)[-1] == "test_acceptance"
            and getattr(m, "RESULTS", None)
        ),
        None,
    )
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
