#pragma once

// Reference values used across the suite.  Closed-form entries are exact;
// the rest were computed with an independent high-precision implementation
// (160-digit arithmetic, alternate algorithms) and rounded to double.  Do
// not regenerate them from the library under test.

#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// --- classical special values -------------------------------------------
inline constexpr double erf_half = 0.52049987781304654;
inline constexpr double erf_one = 0.84270079294971487;
inline constexpr double erf_three = 0.99997790950300141;
inline constexpr double gamma_3_4 = 1.2254167024651776;
inline constexpr double dawson_three = 0.17827103061055829;

// --- scaled parabolic cylinder Dhat_nu(z) = e^{z^2/4} D_nu(z) ------------
struct DhatCase {
    double nu;
    cplx z;
    cplx value;
};

inline const std::vector<DhatCase> dhat_cases = {
    // nu = -3/2
    {-1.5, {0.0, 0.0}, {1.1627366340382372, 0.0}},
    {-1.5, {2.0, 0.0}, {0.26082543774382273, 0.0}},
    {-1.5, {-3.0, 0.0}, {433.88375914846254, 0.0}},
    {-1.5, {2.8660094673768181, 0.88656061998401869},
     {0.15476536667889026, -0.060298029054762216}},
    {-1.5, {0.31124368733789283, 4.3889779410578399},
     {-0.074269575473023817, -0.096461334377123791}},
    {-1.5, {-0.27217783108508142, 4.591940682137109},
     {-0.087634081996557671, -0.070967018313064539}},
    {-1.5, {-2.9128744954487715, 0.71774798764194724},
     {-157.22952814504107, -207.0306244836252}},
    {-1.5, {10.0, 0.0}, {0.031051905938466347, 0.0}},
    {-1.5, {3.6235775447667362, 9.3203908596722633},
     {-0.0068705815291555415, -0.031319134163604445}},
    {-1.5, {22.945265618534654, -19.326530617130731},
     {0.0030378442363527722, 0.0052708477987756773}},
    {-1.5, {-1.6722499450817988, 33.958851277997816},
     {-0.0038267088833318593, -0.0032987091488605989}},
    {-1.5, {-7.0710678118654755, 0.0}, {540182929015.06829, 0.0}},
    {-1.5, {-20.0, 0.0}, {9.1373511121110177e+87, 0.0}},
    {-1.5, {-30.0, 0.0}, {4.1933594519219405e+196, 0.0}},
    {-1.5, {-7.5377787253492647, 2.6799052012472407},
     {22892453360.649858, -478962629648.21689}},
    {-1.5, {-41.614683654714239, 90.92974268256817},
     {-0.00099013385291294106, -0.00014099674921660509}},
    {-1.5, {49.497474683058328, -49.497474683058325},
     {0.00065402369887834502, 0.0015772455516828437}},
    {-1.5, {-49.497474683058322, 49.497474683058331},
     {23.633703221566944, 1.1726280298260137}},
    {-1.5, {-24.292002075016069, 102.91183719663843},
     {-0.00083314611560159763, -0.00038980690130514118}},
    // nu = -1/2
    {-0.5, {0.0, 0.0}, {1.2162802142575203, 0.0}},
    {-0.5, {1.3815914910043276, -0.58412751346297577},
     {0.73738941054423031, 0.10562647037374175}},
    {-0.5, {3.2418138352088383, 5.048825908847379},
     {0.36159295386900332, -0.19292549249697077}},
    {-0.5, {38.213459565024241, 11.820808266453583},
     {0.15631133079966364, -0.02360303257986007}},
    {-0.5, {-8.7386234863463145, 2.1532439629258417},
     {1758812548162133.0, 277010243376009.45}},
    {-0.5, {-5.0, 0.0}, {172531.04944601092, 0.0}},
    {-0.5, {-1.6722499450817988, 33.958851277997816},
     {0.11828227669876486, -0.12425818312660393}},
    // nu = +1/2
    {0.5, {1.7551651237807454, 0.958851077208406},
     {1.4017539306085938, 0.32708057259782652}},
    {0.5, {5.4431534571069277, 10.694488320737225},
     {2.9530088726996964, 1.8076314240518498}},
    {0.5, {-4.0, 0.0}, {-308.12233717592166, 0.0}},
};

// e^{-820} Dhat_{-3/2}(-40), evaluated with the log prefactor folded in
inline constexpr double dhat_weighted = 3.6868154654384036e-8;

// --- half-line sqrt moments Omega_k(sigma, gamma) -------------------------
// sigma = 1 + 0.5i, gamma = 0.3 + 2i
inline const cplx omega_m1{1.1187832132606366, 1.2699878261704643};
inline const cplx omega_0{-0.28653714773697237, 0.89058198823871203};
inline const cplx omega_1{-0.91454912570139754, 0.78636877693359982};
inline const cplx omega_2{-1.9244522649323208, 0.70491149650151331};

// Int_0^inf sqrt(p) e^{-p^2/2} dp = 2^{-1/4} Gamma(3/4)
inline const double halfline_plain = 1.0304485122949956;

// --- free Gaussian packet, pbar = 5, s = 0.3 ------------------------------
inline constexpr double pi_ab_5_03_50_8 = 0.0022938763025077352;
inline constexpr double pi_ab_5_03_50_10 = 0.58098475315529470;
inline constexpr double pi_ab_peak_tau = 9.9288699913299349;
inline constexpr double pi_ab_peak_val = 0.58416988547252605;
// boosted packet, pbar = 3, s = 0.5
inline const cplx psi_3_05_tau7_z20{-0.30466267063343385, 0.11278219084202315};
inline constexpr double mean_arrival_beta3_L30 = 10.696261836633497;  // L = 30
// same packet, L = 30: Int_0^60 of the arrival density
inline constexpr double norm_3_05_30 = 0.99999970708457759;

// --- delta-well bound state, L = 1 ----------------------------------------
inline const cplx delta_I_L1{0.16688123724453373, 0.48516809492875846};
inline constexpr double delta_pi_L1 = 0.083791075644474306;

// --- magnetic family -------------------------------------------------------
// sigma(t, eta): 1/sigma = 1/(1+it) + i eta
inline const cplx sigma_1_05{2.0, 0.0};
inline const cplx sigma_1_1{1.0, -1.0};
inline const cplx sigma_2_05{4.0, -2.0};
inline const cplx sigma_0_05{0.8, -0.4};
// z-factor of the eta-gauge momentum amplitude, p = 0.7, tau = 1, eta = 0.5
inline const cplx fz_momentum_07{0.096944825449311374, -0.53856905972223493};

// standard (gauge-dependent) arrival density
inline constexpr double pi_std_t1_eta1_L1 = 0.11197330804675845;
inline constexpr double pi_std_t17_eta0_L25 = 0.079132593650815383;
inline constexpr double pi_std_t0_eta05_L1 = 0.14936983067481327;
inline constexpr double pi_std_t1_eta05_L1 = 0.077952896960751954;
inline constexpr double pi_std_t100_eta05_L100 = 0.10168471713501925;
inline constexpr double pi_std_t100_eta0_L100 = 0.0020525218897156438;
// late-time coefficient c(eta, L) = lim tau * Pi_STD(tau)
inline constexpr double c_inf_eta05_L1 = 0.212554404226;
inline constexpr double c_inf_eta02_L03 = 0.08696223444;
// log-tail mean: Int_T^{2T} Pi_STD / (c ln 2) at eta = 0.5, L = 1, T = 10^3
inline constexpr double log_tail_ratio = 0.998726;
// sup |Pi_STD(eta=0.5) - Pi_STD(eta=0)| over tau, against the peak
inline constexpr double gauge_sup_L1 = 0.0363271;
inline constexpr double gauge_peak_L1 = 0.128333;
inline constexpr double gauge_sup_L100 = 0.117571;
inline constexpr double gauge_peak_L100 = 0.00208762;

// --- quantum flux ----------------------------------------------------------
// canonical current of the magnetic state, z-component at r=0.7, z=1.2, t=2
inline constexpr double jz_magnetic = 0.017707217395250219;
inline constexpr double pi_qf_t1_L1 = 0.12098536225957167;
inline constexpr double pi_qf_t5_L10 = 0.0045453952534309782;
inline constexpr double pi_qf_t100_L100 = 0.0020754337076354503;
inline constexpr double pi_qf_t05_L1 = 0.090697321795983305;
inline constexpr double pi_qf_peak_L100 = 99.997500218767968;
inline constexpr double pi_qf_mass_L1 = 0.42135039647485743;  // erf(1)/2

// free boosted packet (alpha=1, beta=1), far field x=(0,0,200), t=200
inline constexpr double far_field_jz_exact = 2.2447548477316799e-8;
inline constexpr double far_field_jz_approx = 2.2448390265645820e-8;

// two-bump superposition p1=1, p2=4, ratio=0.6, s=0.1
inline constexpr double two_bump_norm_c = 0.85749292571254419;
inline constexpr double backflow_j1d = -0.032141344245314168;  // z=pi/3, t=0
inline constexpr double backflow_j3d_axis = -0.010230907628519988;
// min over z in [0.4, 1.8] of the 1d current at fixed times
inline constexpr double backflow_min_t00 = -0.0321;
inline constexpr double backflow_min_t03 = -0.0315;
inline constexpr double backflow_min_t06 = -0.0324;
inline constexpr double backflow_min_t10 = -0.0320;
inline constexpr double backflow_min_t20 = -0.0200;

// --- Kijowski --------------------------------------------------------------
// right-half Gaussian z-factor, L = 0: F0 at tau = 0 and its time decay
inline constexpr double f0_counterexample = 0.19068994087545330;
inline constexpr double f0_decay_ratio_sqrt3 = 0.35355339059327376;
inline constexpr double f0_mass_T1e3 = 0.97587942201611448;
inline constexpr double f0_mass_T1e4 = 0.99237240237642326;
// boosted packet (pbar=3, s=0.5), L = 100: exact density at tau = 30
inline constexpr double kij_exact_tau30 = 0.070868440929495404;

// --- Bohmian ensemble (splitmix64 streams, seed fixed by the sampler) -----
inline constexpr unsigned long long stream0_state = 15839785061582574730ull;
inline constexpr unsigned long long stream1_state = 10905525725756348110ull;
inline constexpr unsigned long long stream2_state = 13819372491320860226ull;
inline constexpr unsigned long long stream0_x0 = 4689417271487893854ull;
inline constexpr unsigned long long stream0_x1 = 16504729922532956341ull;
inline constexpr unsigned long long stream0_x2 = 6897020350007722980ull;
inline constexpr unsigned long long stream0_x3 = 13781747982780527690ull;
inline constexpr double stream0_u0 = 0.25421381967191115;
inline constexpr double stream0_u1 = 0.8947232019148372;
inline constexpr double stream0_u2 = 0.37388822235775543;
inline constexpr double stream0_u3 = 0.7471100551789184;
inline constexpr double sample0_R0 = 1.1702903726660137;
inline constexpr double sample0_Phi0 = 5.621711676263979;
inline constexpr double sample0_z0 = -0.018009373640228987;
inline constexpr double sample1_R0 = 0.9674406398007032;
inline constexpr double sample1_Phi0 = 0.5322579270691277;
inline constexpr double sample1_z0 = -0.38795272957975163;
inline constexpr double sample2_R0 = 1.5468010250753197;
inline constexpr double sample2_Phi0 = 5.192840879437414;
inline constexpr double sample2_z0 = -0.4189443880123162;

// ensemble statistics, seed 2
inline constexpr int ens_L1_n = 20000;
inline constexpr int ens_L1_arrivals = 8284;
inline constexpr double ens_L1_taus[5] = {4.918500360755929, 4.599198474379598,
                                          1.4845376494735272, 0.4854751483140688,
                                          53.67103601732986};
inline constexpr int ens_L1_bins[20] = {507, 1127, 1094, 910, 756, 515, 452,
                                        321, 249, 215, 190, 166, 122, 102,
                                        98,  86,  75,  68,  61,  60};
inline constexpr int ens_L100_n = 100000;
inline constexpr int ens_L100_arrivals = 49982;
inline constexpr double ens_L100_D_tau = 0.0034602691895451176;
inline constexpr double ens_L100_D_z = 0.002388782649897947;
inline constexpr double ens_L100_D_r = 0.0030673431610919732;

}  // namespace oracle
