from hypothesis import HealthCheck, settings, strategies as st

from ncisotropy.ore import NcPoly, Presentation
from ncisotropy.scalars import CycloContext

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

QCTX = CycloContext(("p", "mu"))
PLAIN = CycloContext(())
CONTEXTS = {
    Presentation.QUANTUM_WEYL: QCTX,
    Presentation.JORDANIAN: PLAIN,
    Presentation.FIRST_WEYL: PLAIN,
}


@st.composite
def scalars(draw, ctx=QCTX, allow_zero=True):
    """Small rational functions in the context parameters (and zeta, if any)."""
    out = ctx.const(draw(st.integers(-4, 4)))
    for _ in range(draw(st.integers(0, 3))):
        term = ctx.const(draw(st.integers(-3, 3)))
        for name in ctx.params:
            term = term * ctx.param(name) ** draw(st.integers(-1, 2))
        if ctx.order > 1:
            term = term * ctx.zeta() ** draw(st.integers(0, ctx.order - 1))
        out = out + term
    if not allow_zero and out.is_zero():
        out = ctx.one()
    return out


@st.composite
def elements(draw, pres, max_deg=4, max_terms=3):
    ctx = CONTEXTS[pres]
    out = NcPoly.zero(pres, ctx)
    for _ in range(draw(st.integers(0, max_terms))):
        i = draw(st.integers(0, max_deg))
        j = draw(st.integers(0, max_deg - i))
        c = draw(st.integers(-3, 3))
        out = out + NcPoly.monomial(pres, ctx, i, j, c)
    return out


presentations = st.sampled_from(list(Presentation))
