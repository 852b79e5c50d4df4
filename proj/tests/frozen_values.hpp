#pragma once

// Reference values from tests/oracles/frozen_values.py (mpmath, 30 digits):
// quadrature, numerical differentiation or brute-force partial sums, never
// the closed forms under test.

namespace frozen {

inline constexpr double gamma_0_75 = 1.2254167024651776451;
inline constexpr double poch_1_5_m0_25 = 1.0227656721131686716;
inline constexpr double hermite2_4_1_m1 = 1.0;
inline constexpr double hermite_3_0_7 = -5.656;
inline constexpr double quasi_m1_n2 = 0.4543586392349529579;
inline constexpr double dawson_1 = 0.53807950691276841914;
inline constexpr double erfi_1 = 1.650425758797542876;
inline constexpr double hyp2f1_half_1_3half_quarter = 1.0986122886681096914;
inline constexpr double hyp1f2_c1 = 0.77989340037682282947;
inline constexpr double hyp1f1_deriv_1 = 0.40029421441321455233;
inline constexpr double sg_1 = 0.60715770584139372912;
inline constexpr double sg_d2_0_8 = -1.4691756779825373711;
inline constexpr double cg_d3_0_5 = 3.8940039153570243412;
inline constexpr double sg_anti_1 = 0.41718526534347360095;
inline constexpr double gauss_prim_1 = 0.7468241328124270254;
inline constexpr double sg_alpha_0_5 = 0.70323437738233411669;
inline constexpr double quasi_1_n3 = 0.43111007022862632151;
inline constexpr double ie_2 = 2.1719945532483430722;
inline constexpr double e_nu_0_25_m0_5_2 = 1.4839726845137767224;
inline constexpr double quadratic_2_1_3 = 1.5691407211119667716;
inline constexpr double density_3_1_2 = 0.025529848766414636603;
inline constexpr double moment2_n3 = 1.5702287534698013715;
inline constexpr double quasi_d1_1_2 = -0.6369240822951411263;
inline constexpr double i_alpha_0_5 = 2.1719945532483430722;
inline constexpr double levy_1_0_5 = 0.21969564473386119852;
inline constexpr double levy_10_0_7 = 0.0054390512981571771041;
inline constexpr double levy_laplace_2_0_7 = 0.19700921144909110062;
inline constexpr double weibull_4_0_5 = 0.067667641618306345038;
inline constexpr double levy_moment_0_3_0_7 = 1.200704618441449755;
inline constexpr double fresnel_c_1 = 0.77989340037682282947;
inline constexpr double fresnel_s_1 = 0.43825914739035476608;
inline constexpr double fresnel_improper = 0.78539816339744830178;
inline constexpr double quartic_1 = 0.90640247705547707798;
inline constexpr double quartic_0_5 = 1.0779002747704639725;

} // namespace frozen
