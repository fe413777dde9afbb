//! Every operation reachable from the command line, with its parameters,
//! a worked example point and the references it can be compared against.

use std::fmt;

/// How a parameter is filled when the scenario omits it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Need {
    Required,
    Default(&'static str),
    /// Left unset; the evaluator derives it or it only applies to some variants.
    Optional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub need: Need,
}

const fn req(name: &'static str) -> Param {
    Param {
        name,
        need: Need::Required,
    }
}

const fn dflt(name: &'static str, value: &'static str) -> Param {
    Param {
        name,
        need: Need::Default(value),
    }
}

const fn opt(name: &'static str) -> Param {
    Param {
        name,
        need: Need::Optional,
    }
}

macro_rules! targets {
    ($($var:ident => $name:literal $([$($alias:literal),+])?),+ $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Target {
            $($var),+
        }

        impl Target {
            pub const ALL: &'static [Target] = &[$(Target::$var),+];

            pub fn name(self) -> &'static str {
                match self {
                    $(Target::$var => $name),+
                }
            }

            pub fn aliases(self) -> &'static [&'static str] {
                match self {
                    $(Target::$var => &[$($($alias),+)?]),+
                }
            }
        }
    };
}

targets! {
    BesselKHalf => "bessel_k_half",
    BesselIHalf => "bessel_i_half",
    LegendreP => "legendre_p",
    CosPowerToLegendre => "cos_power_to_legendre",
    UpperIncompleteGamma => "upper_incomplete_gamma",
    ErfComplex => "erf_complex" ["erf"],
    Kummer1F1 => "kummer_1f1",
    HermiteH => "hermite_h",
    ExpIntegralEi => "exp_integral_ei" ["ei"],
    MeijerG0313 => "meijer_g_0313",
    IntegrateFinite => "integrate_finite",
    IntegrateSemiInfinite => "integrate_semi_infinite",
    Integrate2d => "integrate_2d",
    YukawaForm => "yukawa_form",
    YukawaExponential => "yukawa_exponential",
    YukawaPowerForm => "yukawa_power_form",
    Theorem1Term => "theorem1_term",
    Theorem1Eval => "theorem1_eval" ["theorem1"],
    Theorem5Term => "theorem5_term",
    Theorem5Eval => "theorem5_eval" ["theorem5"],
    Theorem6Term => "theorem6_term",
    Theorem6Eval => "theorem6_eval" ["theorem6"],
    CorollaryToParams => "corollary_to_params",
    CorollaryEval => "corollary_eval" ["corollary"],
    Corollary1LegendreCoefficients => "corollary1_legendre_coefficients",
    Corollary1LegendreEval => "corollary1_legendre_eval",
    SlaterDirect => "slater_direct",
    TwoRangeMosEval => "two_range_mos_eval" ["two_range"],
    S1CoulombClosed => "s1_coulomb_closed",
    S1TwoSlaterClosed => "s1_two_slater_closed",
    S1EqualEtaClosed => "s1_equal_eta_closed",
    S1TwoSlaterOracle => "s1_two_slater_oracle",
    S1TauOracle => "s1_tau_oracle",
    S1SeriesNTerm => "s1_series_n_term",
    S1N0ErfClosed => "s1_n0_erf_closed",
    S1GeneralTermGamma => "s1_general_term_gamma",
    S1SeriesEval => "s1_series_eval" ["s1_series"],
    CheshireSeries => "cheshire_series",
    Theorem2Angular => "theorem2_angular" ["theorem2"],
    Theorem2AngularOracle => "theorem2_angular_oracle",
    Theorem3Series => "theorem3_series" ["theorem3"],
    Theorem4Series => "theorem4_series" ["theorem4"],
    Corollary6N0Closed => "corollary6_n0_closed",
    Corollary6N0Oracle => "corollary6_n0_oracle",
    EllipsoidalIntegrand => "ellipsoidal_integrand",
    TAbcOracle => "t_abc_oracle",
    TAbcExact => "t_abc_exact",
    TAbcSeriesTerm => "t_abc_series_term",
    TAbcSeries => "t_abc_series" ["t_abc"],
    StallDetector => "stall_detector",
}

const YUKAWA: &[Param] = &[req("B"), req("C"), req("x2"), req("k"), dflt("branch", "principal")];
const YUKAWA_N: &[Param] = &[
    req("n"),
    req("B"),
    req("C"),
    req("x2"),
    req("k"),
    dflt("branch", "principal"),
];
const YUKAWA_J: &[Param] = &[
    req("j"),
    req("B"),
    req("C"),
    req("x2"),
    req("k"),
    dflt("branch", "principal"),
];
const YUKAWA_JN: &[Param] = &[
    req("j"),
    req("n"),
    req("B"),
    req("C"),
    req("x2"),
    req("k"),
    dflt("branch", "principal"),
];
const COROLLARY: &[Param] = &[
    req("variant"),
    req("eta"),
    dflt("k", "1"),
    dflt("branch", "principal"),
    opt("x1"),
    opt("x2"),
    opt("cos_theta"),
    opt("y1"),
    opt("z1"),
    opt("z2"),
];
const COROLLARY1: &[Param] = &[
    dflt("variant", "C1"),
    req("eta"),
    dflt("k", "1"),
    dflt("branch", "principal"),
    req("x1"),
    req("x2"),
    req("cos_theta"),
];
const COROLLARY1_N: &[Param] = &[
    req("n"),
    dflt("variant", "C1"),
    req("eta"),
    dflt("k", "1"),
    dflt("branch", "principal"),
    req("x1"),
    req("x2"),
    req("cos_theta"),
];
const PAIR: &[Param] = &[req("eta1"), req("eta2"), req("x2"), req("k"), opt("k_dot_x2")];
const PAIR_N: &[Param] = &[req("n"), req("eta1"), req("eta2"), req("x2"), req("k"), opt("k_dot_x2")];

const YUKAWA_EX: &[(&str, &str)] = &[("B", "0.13"), ("C", "0.11"), ("x2", "0.17"), ("k", "0.23")];
const PAIR_EX: &[(&str, &str)] = &[("eta1", "0.82"), ("eta2", "0.66"), ("x2", "0.36"), ("k", "0.19")];
const SPHERICAL_EX: &[(&str, &str)] = &[
    ("variant", "C4"),
    ("eta", "0.9"),
    ("x1", "0.4"),
    ("x2", "1.1"),
    ("cos_theta", "0.3"),
];

impl Target {
    /// Accepts the canonical name or an alias.
    pub fn from_name(s: &str) -> Option<Target> {
        let s = s.trim();
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s || t.aliases().contains(&s))
    }

    pub fn params(self) -> &'static [Param] {
        use Target::*;
        match self {
            BesselKHalf => const { &[req("n"), req("z")] },
            BesselIHalf => const { &[req("n"), req("x")] },
            LegendreP => const { &[req("n"), req("u")] },
            CosPowerToLegendre => const { &[req("j"), dflt("u", "0.5")] },
            UpperIncompleteGamma => const { &[req("a"), req("z")] },
            ErfComplex => const { &[req("z")] },
            Kummer1F1 => const { &[req("a"), req("b"), req("z")] },
            HermiteH => const { &[req("j"), req("x")] },
            ExpIntegralEi => const { &[req("x")] },
            MeijerG0313 => const { &[req("j"), req("mu"), req("arg")] },
            IntegrateFinite => {
                const {
                    &[
                        dflt("lo", "0"),
                        req("hi"),
                        dflt("p", "0"),
                        dflt("lambda", "1"),
                        dflt("omega", "0"),
                    ]
                }
            }
            IntegrateSemiInfinite => {
                const { &[dflt("lo", "0"), dflt("p", "0"), dflt("lambda", "1"), dflt("omega", "0")] }
            }
            Integrate2d => {
                const {
                    &[
                        req("x_hi"),
                        req("y_hi"),
                        dflt("p", "0"),
                        dflt("q", "0"),
                        dflt("lambda", "1"),
                        dflt("mu", "1"),
                    ]
                }
            }
            YukawaForm | YukawaExponential | Theorem1Eval | Theorem5Eval => YUKAWA,
            YukawaPowerForm | Theorem6Eval => YUKAWA_J,
            Theorem1Term | Theorem5Term => YUKAWA_N,
            Theorem6Term => YUKAWA_JN,
            CorollaryToParams | CorollaryEval | SlaterDirect => COROLLARY,
            Corollary1LegendreEval => COROLLARY1,
            Corollary1LegendreCoefficients => COROLLARY1_N,
            TwoRangeMosEval => const { &[req("eta"), req("x1"), req("x2"), req("cos_theta"), dflt("n_max", "60")] },
            S1CoulombClosed => const { &[req("eta1"), req("x2")] },
            S1TwoSlaterClosed | S1TwoSlaterOracle => const { &[req("eta1"), req("eta2"), req("x2")] },
            S1EqualEtaClosed => const { &[req("eta2"), req("x2")] },
            S1TauOracle | S1N0ErfClosed | S1SeriesEval => PAIR,
            S1SeriesNTerm | S1GeneralTermGamma => PAIR_N,
            CheshireSeries => const { &[req("eta1"), req("x2"), req("k"), opt("k_dot_x2")] },
            Theorem2Angular | Theorem2AngularOracle => const { &[req("eta2"), req("x1"), req("x2")] },
            Theorem3Series => {
                const {
                    &[
                        req("eta1"),
                        req("eta2"),
                        req("x2"),
                        dflt("n_max", "8"),
                        dflt("k_max", "60"),
                    ]
                }
            }
            Theorem4Series => const { &[req("eta2"), req("x2"), dflt("n_max", "6")] },
            Corollary6N0Closed | Corollary6N0Oracle => const { &[req("eta1"), req("eta2")] },
            EllipsoidalIntegrand => const { &[req("R"), req("lambda"), req("mu")] },
            TAbcOracle | TAbcExact | TAbcSeries => const { &[req("R")] },
            TAbcSeriesTerm => const { &[req("n"), req("R")] },
            StallDetector => const { &[req("R"), dflt("window", "4")] },
        }
    }

    /// A valid parameter point, used by `list` and the coverage tests.
    pub fn example(self) -> &'static [(&'static str, &'static str)] {
        use Target::*;
        match self {
            BesselKHalf => &[("n", "2"), ("z", "1.5+0.5i")],
            BesselIHalf => &[("n", "3"), ("x", "0.8")],
            LegendreP => &[("n", "4"), ("u", "0.3")],
            CosPowerToLegendre => &[("j", "5")],
            UpperIncompleteGamma => &[("a", "-1.5"), ("z", "2+1i")],
            ErfComplex => &[("z", "0.7-0.4i")],
            Kummer1F1 => &[("a", "2"), ("b", "5"), ("z", "1.2+0.3i")],
            HermiteH => &[("j", "4"), ("x", "0.6")],
            ExpIntegralEi => &[("x", "-0.22")],
            MeijerG0313 => &[("j", "1"), ("mu", "0.5"), ("arg", "0.3")],
            IntegrateFinite => &[("hi", "2"), ("p", "1.5"), ("lambda", "0.7"), ("omega", "1.3")],
            IntegrateSemiInfinite => &[("lo", "0.5"), ("p", "1"), ("lambda", "1.2"), ("omega", "0.4")],
            Integrate2d => &[("x_hi", "1"), ("y_hi", "inf"), ("p", "1"), ("q", "0.5"), ("mu", "2")],
            YukawaForm | YukawaExponential | Theorem1Eval | Theorem5Eval => YUKAWA_EX,
            YukawaPowerForm | Theorem6Eval => {
                &[("j", "2"), ("B", "0.13"), ("C", "0.11"), ("x2", "0.17"), ("k", "0.23")]
            }
            Theorem1Term | Theorem5Term => &[("n", "1"), ("B", "0.13"), ("C", "0.11"), ("x2", "0.17"), ("k", "0.23")],
            Theorem6Term => &[
                ("j", "2"),
                ("n", "1"),
                ("B", "0.13"),
                ("C", "0.11"),
                ("x2", "0.17"),
                ("k", "0.23"),
            ],
            CorollaryToParams | CorollaryEval | SlaterDirect => SPHERICAL_EX,
            Corollary1LegendreEval => &[("eta", "0.5"), ("x1", "0.4"), ("x2", "1.1"), ("cos_theta", "0.3")],
            Corollary1LegendreCoefficients => &[
                ("n", "3"),
                ("eta", "0.5"),
                ("x1", "0.4"),
                ("x2", "1.1"),
                ("cos_theta", "0.3"),
            ],
            TwoRangeMosEval => &[("eta", "0.9"), ("x1", "0.4"), ("x2", "1.1"), ("cos_theta", "0.3")],
            S1CoulombClosed => &[("eta1", "1"), ("x2", "2")],
            S1TwoSlaterClosed | S1TwoSlaterOracle => &[("eta1", "0.11"), ("eta2", "0.13"), ("x2", "0.17")],
            S1EqualEtaClosed => &[("eta2", "0.13"), ("x2", "0.17")],
            S1TauOracle | S1N0ErfClosed | S1SeriesEval => PAIR_EX,
            S1SeriesNTerm | S1GeneralTermGamma => &[
                ("n", "1"),
                ("eta1", "0.82"),
                ("eta2", "0.66"),
                ("x2", "0.36"),
                ("k", "0.19"),
            ],
            CheshireSeries => &[("eta1", "1"), ("x2", "1"), ("k", "0.5"), ("k_dot_x2", "0.3")],
            Theorem2Angular | Theorem2AngularOracle => &[("eta2", "1"), ("x1", "1"), ("x2", "1")],
            Theorem3Series => &[("eta1", "0.11"), ("eta2", "0.13"), ("x2", "0.17")],
            Theorem4Series => &[("eta2", "0.13"), ("x2", "0.17")],
            Corollary6N0Closed | Corollary6N0Oracle => &[("eta1", "1"), ("eta2", "2")],
            EllipsoidalIntegrand => &[("R", "0.11"), ("lambda", "1.5"), ("mu", "0.2")],
            TAbcOracle | TAbcExact | TAbcSeries | StallDetector => &[("R", "0.11")],
            TAbcSeriesTerm => &[("n", "3"), ("R", "0.11")],
        }
    }

    /// Named references for `compare` and the table's ref columns. The first
    /// entry is the default.
    pub fn references(self) -> &'static [&'static str] {
        use Target::*;
        match self {
            BesselKHalf | BesselIHalf | UpperIncompleteGamma | ErfComplex | Kummer1F1 | ExpIntegralEi => &["integral"],
            CosPowerToLegendre => &["power"],
            IntegrateFinite | IntegrateSemiInfinite | Integrate2d => &["closed"],
            Theorem1Eval => &["yukawa_form"],
            Theorem5Eval => &["yukawa_exponential"],
            Theorem6Eval => &["yukawa_power_form"],
            CorollaryToParams | CorollaryEval | Corollary1LegendreEval => &["slater_direct", "two_range"],
            TwoRangeMosEval => &["slater_direct"],
            S1CoulombClosed | S1TwoSlaterClosed | S1EqualEtaClosed | Corollary6N0Closed => &["quadrature"],
            S1TwoSlaterOracle => &["closed"],
            S1TauOracle => &["series"],
            S1SeriesNTerm => &["gamma", "erf"],
            S1N0ErfClosed | S1GeneralTermGamma => &["quadrature"],
            S1SeriesEval | CheshireSeries => &["tau_oracle"],
            Theorem2Angular => &["quadrature"],
            Theorem2AngularOracle => &["closed"],
            Theorem3Series => &["s1_two_slater_closed", "tau_oracle"],
            Theorem4Series => &["s1_equal_eta_closed", "tau_oracle"],
            Corollary6N0Oracle => &["closed"],
            TAbcOracle | TAbcSeries => &["t_abc_exact"],
            TAbcExact => &["t_abc_oracle"],
            LegendreP
            | HermiteH
            | MeijerG0313
            | YukawaForm
            | YukawaExponential
            | YukawaPowerForm
            | Theorem1Term
            | Theorem5Term
            | Theorem6Term
            | Corollary1LegendreCoefficients
            | SlaterDirect
            | EllipsoidalIntegrand
            | TAbcSeriesTerm
            | StallDetector => &[],
        }
    }

    pub fn param(self, name: &str) -> Option<Param> {
        self.params().iter().copied().find(|p| p.name == name)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
