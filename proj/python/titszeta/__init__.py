"""Edge zeta functions of spherical buildings of GL_n(F_q).

Thin python surface over the C++ core: exact factorizations (x0_zeta,
x2_zeta, building_zeta, product_building_zeta), brute-force verification
(verify_*), representation-theoretic constants (q_binomial, kostka,
d_lambda, f_lambda), geodesic cycle counts, and the Springer spectrum
check. Big integers cross the boundary as decimal strings.
"""

try:
    from . import _titszeta as _core  # installed layout: extension in the package
except ImportError:  # development layout: extension directory on sys.path
    import _titszeta as _core

__version__ = _core.__version__

building_zeta = _core.building_zeta
d_lambda = _core.d_lambda
deg_psi = _core.deg_psi
f_lambda = _core.f_lambda
geodesic_cycle_counts = _core.geodesic_cycle_counts
group_algebra_trace = _core.group_algebra_trace
kostka = _core.kostka
kostka_ssyt = _core.kostka_ssyt
product_building_zeta = _core.product_building_zeta
q_binomial = _core.q_binomial
q_multinomial = _core.q_multinomial
verify_building = _core.verify_building
verify_product = _core.verify_product
verify_springer = _core.verify_springer
verify_x0 = _core.verify_x0
verify_x2 = _core.verify_x2
x0_zeta = _core.x0_zeta
x2_zeta = _core.x2_zeta
