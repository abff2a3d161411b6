import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled in by test_acceptance.py, printed at the end of the run
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")


_MEMBER = {}


def leech_member():
    """Lattice membership by solving against an integral basis of the span of
    the generators; independent of the congruence criterion."""
    if "f" not in _MEMBER:
        import numpy as np
        import sympy

        from leechlab import leech
        from leechlab.quadform import hermite_normal_form

        basis = sympy.Matrix(hermite_normal_form(leech.generators().tolist()))
        inv = basis.inv()
        den = int(sympy.ilcm(*[x.q for x in inv]))
        inv_int = np.array((inv * den).tolist(), dtype=object)

        def member(v):
            y = np.array([int(x) for x in v], dtype=object) @ inv_int
            return all(int(t) % den == 0 for t in y)

        _MEMBER["f"] = (basis, member)
    return _MEMBER["f"]
