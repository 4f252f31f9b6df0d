// Generated by tests/make_oracles.py -- do not edit by hand.
// Frozen reference values; see that script for provenance.
#pragma once

namespace oracle {

struct AiryRow { double x, ai, aip; };
inline constexpr AiryRow kAiry[] = {
    {-20.0, -0.1764061270779847, 0.8928628567364713},
    {-15.3, 0.04531427266427469, 1.1024256300132058},
    {-12.5, -0.27627456138116024, -0.41933133041950515},
    {-12.0, -0.06655517505437313, 1.0231104533679707},
    {-11.6, 0.27937454868332384, 0.42871139792683144},
    {-10.0, 0.04024123848644319, 0.99626504413279},
    {-8.0, -0.0527050503563862, 0.9355609381983065},
    {-6.8, 0.012104524277364876, -0.9103040051588044},
    {-6.5, -0.2380203019971158, -0.6749524925132022},
    {-6.2, -0.3564210736689614, -0.08106855619630456},
    {-5.0, 0.35076100902411433, 0.32719281855444315},
    {-4.5, 0.2921527810559595, -0.5233625323157477},
    {-3.3, -0.41718093737455014, -0.07096361717783588},
    {-2.0, 0.22740742820168558, 0.618259020741691},
    {-1.0, 0.5355608832923521, -0.01016056711664521},
    {-0.55, 0.4856227355610109, -0.19146049871436543},
    {-0.001, 0.35528687323241714, -0.25881922619250675},
    {0.0, 0.3550280538878172, -0.2588194037928068},
    {0.3, 0.2788064819550049, -0.2451463642190548},
    {1.0, 0.13529241631288141, -0.1591474412967932},
    {2.0, 0.03492413042327438, -0.05309038443365363},
    {3.7, 0.0017455720006099786, -0.003466940749027627},
    {4.5, 0.00033025032351430896, -0.0007178665675575089},
    {5.0, 0.00010834442813607442, -0.0002474138908684625},
    {6.4, 3.6177623188518e-06, -9.288603444862975e-06},
    {6.5, 2.7958823432049136e-06, -7.231931466601793e-06},
    {6.6, 2.156599952596922e-06, -5.6193194443457906e-06},
    {8.0, 4.6922076160992316e-08, -1.3414392979067865e-07},
    {10.0, 1.1047532552898686e-10, -3.5206336767389237e-10},
    {12.5, 2.39682782607805e-14, -8.521346564673856e-14},
    {16.0, 4.1568888289170244e-20, -1.669188676838181e-19},
    {20.0, 1.6916728686705404e-27, -7.586391625748354e-27},
};

struct LgammaRow { double x, lg; };
inline constexpr LgammaRow kLgamma[] = {
    {0.5, 0.5723649429247001},
    {1.0, 0.0},
    {1.5, -0.12078223763524522},
    {2.0, 0.0},
    {3.25, 0.9358019311087253},
    {7.0, 6.579251212010101},
    {10.7, 14.403210596298516},
    {101.5, 366.04569819527677},
    {1000.25, 5906.9472682711175},
    {5001.0, 37591.14350887677},
    {60001.5, 600137.9115182675},
};

struct HermiteRow { int n; double x, phi; };
inline constexpr HermiteRow kHermitePhi[] = {
    {5, 1.3, -0.39939146281375076},
    {50, 10.3, 0.16498964318958603},
    {50, -4.2, 0.26253990012015277},
    {500, 31.9, 0.09105951299493978},
    {500, 0.7, -0.1401878372693804},
    {2000, 63.4, 0.1149080264311272},
};

struct LaguerreRow { int n; double a, x, phi; };
inline constexpr LaguerreRow kLaguerrePhi[] = {
    {3, 1.0, 4.0, -0.18044704431548358},
    {20, 0.5, 45.0, -0.12387508104422505},
    {300, 2.5, 1180.0, 0.05101270798027295},
    {300, 2.5, 5.0, -0.06926117002044205},
    {1000, 0.0, 3990.0, 0.03739908302519901},
    {200, 1000.0, 2370.0, 0.04723024274916329},
};

struct DetRow { double xi, t, det; };
inline constexpr DetRow kAiryDet[] = {
    {1.0, -8.0, 1.985902374055848e-19},
    {1.0, -6.0, 1.0622546749393265e-08},
    {1.0, -4.0, 0.0035445535955115756},
    {1.0, -2.0, 0.4132241425050049},
    {1.0, 0.0, 0.9693728283552464},
    {1.0, 2.0, 0.9998875536983094},
    {1.0, 4.0, 0.9999999504208802},
    {0.6, -8.0, 0.01417785193558768},
    {0.6, -2.0, 0.6445936173786498},
    {0.6, 0.0, 0.9816231662689741},
    {0.3, -4.0, 0.5556311796646541},
    {0.3, 0.0, 0.9908113841054014},
};

// variant: 0 = gue, 1 = lue, 2 = lue-alpha
struct OmegaRow { int variant; double alpha, xi, t, omega; };
inline constexpr OmegaRow kOmega[] = {
    {0, 0.0, 1.0, -4.0, 0.007640875567351623},
    {0, 0.0, 1.0, -2.0, 0.08288789357280552},
    {0, 0.0, 1.0, 0.0, 0.009448517943304053},
    {0, 0.0, 0.6, -2.0, 0.05408110689641061},
    {1, 0.0, 1.0, -2.0, -0.2314945462791122},
    {1, 0.0, 1.0, 0.0, 0.01587251552943786},
    {2, 0.5, 1.0, -2.0, -0.1996640279314217},
    {2, 5.0, 1.0, 0.0, 0.01082067492674466},
};

inline constexpr double kP0AtM2Xi1 = 0.44138180112336667;
inline constexpr double kP1GueAtM2Xi1 = -0.031674059174799145;

struct TailRow { double y, val; };
// int_y^inf K(y,x)^2 dx for the Airy kernel
inline constexpr TailRow kAiryTailSq[] = {
    {4.0, 1.0626240157803325e-14},
    {5.0, 1.3404547121587068e-18},
    {8.0, 2.4901180282926005e-32},
};

} // namespace oracle
