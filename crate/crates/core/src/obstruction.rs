//! Obstruction certificates: the chain of checks showing that no elliptic
//! curve over a number field of degree `d` has a rational point of order `N`.
//!
//! A certificate interleaves three kinds of step. Computed checks carry the
//! numbers they were derived from; table premises come from the gonality
//! lists and the `J_1(N)` decomposition table; theorem premises are cited
//! results taken on trust and always pass. The verdict is `RuledOut` exactly
//! when every step passes, so the engine never claims more than it computed.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{is_prime, make_field, FieldError};
use crate::modcurve::{
    genus_x1, gonality_exceeds, DecompositionFactor, DecompositionTable, Finiteness, ModCurveError,
};
use crate::table::FieldTable;
use crate::trace::{
    admissible_trace, multiples_in_hasse, PrimePower, TraceError, WaterhouseCondition,
};
use crate::weierstrass::{curves_with_point_of_order, CurveError};

/// Residue characteristic used when none is given.
pub const DEFAULT_PRIME: u64 = 3;
/// Field degree used when none is given.
pub const DEFAULT_DEGREE: u32 = 3;
/// Largest degree with embedded gonality data.
pub const MAX_SUPPORTED_DEGREE: u32 = 3;
/// Bound on the component group of the special fibre under additive reduction.
pub const ADDITIVE_COMPONENT_BOUND: u64 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("degree {0} is unsupported; gonality data covers degrees 1 to {max}", max = MAX_SUPPORTED_DEGREE)]
    UnsupportedDegree(u32),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("level must be positive")]
    ZeroLevel,
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    ModCurve(#[from] ModCurveError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Cited theorems the certificate relies on without recomputing them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Premise {
    FreyInjectivity,
    KatzSpecialization,
    ManinDrinfeld,
    SerreMilne,
    TorsionReductionInjective,
    IgusaGoodReduction,
    AdditiveComponentBound,
}

impl Premise {
    /// Certificate order.
    pub const ALL: [Premise; 7] = [
        Premise::FreyInjectivity,
        Premise::KatzSpecialization,
        Premise::ManinDrinfeld,
        Premise::SerreMilne,
        Premise::TorsionReductionInjective,
        Premise::IgusaGoodReduction,
        Premise::AdditiveComponentBound,
    ];

    pub fn statement(&self) -> &'static str {
        match self {
            Premise::FreyInjectivity => {
                "if Gon(X) > d then X^(d)(K) -> J_X(K), D -> [D - d*inf], is injective for every number field K"
            }
            Premise::KatzSpecialization => {
                "if e(K/Q) < p - 1 at a prime over p, reduction A(K)_tors -> A(F_p-bar) is injective for an abelian variety A/K"
            }
            Premise::ManinDrinfeld => {
                "the difference of two cusps of a modular curve has finite order in its Jacobian"
            }
            Premise::SerreMilne => {
                "a K-rational point of Y_1(N), char K not dividing N, is represented by a K-rational pair (E, +-P)"
            }
            Premise::TorsionReductionInjective => {
                "for m prime to the residue characteristic, E(K)[m] -> E~(k) is injective"
            }
            Premise::IgusaGoodReduction => "X_1(N) has good reduction at every prime p not dividing N",
            Premise::AdditiveComponentBound => {
                "under additive reduction E~(k)^0 is G_a(k) and the component group has order at most 4"
            }
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Premise::FreyInjectivity => "Frey, Curves with infinitely many points of fixed degree (1994), Prop. 1, generalized to degree d",
            Premise::KatzSpecialization => "Katz, Galois properties of torsion points on abelian varieties (1981), Appendix",
            Premise::ManinDrinfeld => "Manin (1972); Drinfeld (1973)",
            Premise::SerreMilne => "Ogg, Rational points on certain elliptic modular curves, Theorem 1",
            Premise::TorsionReductionInjective => "reduction of torsion prime to the residue characteristic on the Neron model",
            Premise::IgusaGoodReduction => "Igusa, Kroneckerian model of fields of elliptic modular functions (1959)",
            Premise::AdditiveComponentBound => "Neron model special fibre: component group of additive reduction has order <= 4",
        }
    }
}

impl fmt::Display for Premise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Premise::FreyInjectivity => "Frey injectivity",
            Premise::KatzSpecialization => "Katz specialization",
            Premise::ManinDrinfeld => "Manin-Drinfeld",
            Premise::SerreMilne => "Serre-Milne",
            Premise::TorsionReductionInjective => "torsion reduction injective",
            Premise::IgusaGoodReduction => "Igusa good reduction",
            Premise::AdditiveComponentBound => "additive component bound",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    ComputedCheck,
    TablePremise,
    TheoremPremise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepStatus {
    Pass,
    Fail,
}

/// Which link of the argument a step establishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepName {
    Hypotheses,
    GonalityGate,
    FinitenessGate,
    AdditiveReduction,
    Premise(Premise),
    GoodReduction,
}

impl fmt::Display for StepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepName::Hypotheses => f.write_str("hypotheses"),
            StepName::GonalityGate => f.write_str("gonality gate"),
            StepName::FinitenessGate => f.write_str("finiteness gate"),
            StepName::AdditiveReduction => f.write_str("additive reduction"),
            StepName::Premise(p) => write!(f, "premise: {p}"),
            StepName::GoodReduction => f.write_str("good reduction"),
        }
    }
}

/// `p^f * g` for one residue degree `f` and component-group order `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveProduct {
    pub residue_degree: u32,
    pub component_order: u64,
    pub group_order: u64,
    pub divisible: bool,
}

/// A multiple of `N` inside the Hasse interval and the fate of its trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOrder {
    pub order: u64,
    pub trace: i64,
    pub admissible: bool,
    pub condition: Option<WaterhouseCondition>,
}

/// Analysis of one residue field `F_{p^f}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueField {
    pub residue_degree: u32,
    pub q: u64,
    pub hasse_interval: [u64; 2],
    /// Every multiple of `N` in the interval, with its trace verdict.
    pub candidates: Vec<CandidateOrder>,
    /// Orders that survive: multiples of `N` with an admissible trace.
    pub surviving: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    None,
    Hypotheses {
        level_exceeds_four: bool,
        prime_is_odd: bool,
        prime_coprime_to_level: bool,
    },
    Gonality {
        level: u64,
        degree: u32,
        listed_levels: Vec<u64>,
        exceeds: bool,
    },
    Decomposition {
        level: u64,
        outcome: Finiteness,
        factors: Vec<DecompositionFactor>,
        total_dimension: Option<u64>,
        genus: Option<u64>,
    },
    AdditiveScan {
        component_bound: u64,
        products: Vec<AdditiveProduct>,
    },
    GoodReduction {
        residue_fields: Vec<ResidueField>,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateStep {
    pub name: StepName,
    pub kind: StepKind,
    pub statement: String,
    pub status: StepStatus,
    pub evidence: Evidence,
    pub citation: Option<String>,
}

impl CertificateStep {
    pub fn passed(&self) -> bool {
        self.status == StepStatus::Pass
    }
}

fn status(ok: bool) -> StepStatus {
    if ok {
        StepStatus::Pass
    } else {
        StepStatus::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    RuledOut,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::RuledOut => "RuledOut",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub level: u64,
    pub degree: u32,
    pub prime: u64,
    pub steps: Vec<CertificateStep>,
    pub verdict: Verdict,
}

impl ObstructionCertificate {
    pub fn first_failure(&self) -> Option<&CertificateStep> {
        self.steps.iter().find(|s| !s.passed())
    }

    pub fn step(&self, name: StepName) -> Option<&CertificateStep> {
        self.steps.iter().find(|s| s.name == name)
    }

    /// Residue-field analysis of the good-reduction step, when it ran.
    pub fn residue_fields(&self) -> &[ResidueField] {
        match self.step(StepName::GoodReduction).map(|s| &s.evidence) {
            Some(Evidence::GoodReduction { residue_fields }) => residue_fields,
            _ => &[],
        }
    }
}

/// Under additive reduction `|E~(k)| = p^f * g` with `g <= 4`; passes when `N`
/// divides none of these for `1 <= f <= d`.
pub fn additive_reduction_impossible(level: u64, prime: u64, degree: u32) -> CertificateStep {
    let mut products = Vec::new();
    for f in 1..=degree {
        let additive = prime.pow(f);
        for g in 1..=ADDITIVE_COMPONENT_BOUND {
            let group_order = additive * g;
            products.push(AdditiveProduct {
                residue_degree: f,
                component_order: g,
                group_order,
                divisible: group_order % level == 0,
            });
        }
    }
    let ok = products.iter().all(|p| !p.divisible);
    CertificateStep {
        name: StepName::AdditiveReduction,
        kind: StepKind::ComputedCheck,
        statement: format!(
            "additive reduction is impossible: {level} divides no {prime}^f * g with 1 <= f <= {degree}, 1 <= g <= {ADDITIVE_COMPONENT_BOUND}"
        ),
        status: status(ok),
        evidence: Evidence::AdditiveScan {
            component_bound: ADDITIVE_COMPONENT_BOUND,
            products,
        },
        citation: None,
    }
}

/// Analyses `F_{p^f}` for one `f`.
pub fn residue_field_analysis(
    level: u64,
    prime: u64,
    residue_degree: u32,
) -> Result<ResidueField, ObstructionError> {
    let field = PrimePower::new(prime, residue_degree)?;
    let q = field.q();
    let (lo, hi) = field.hasse_interval();
    let candidates: Vec<CandidateOrder> = multiples_in_hasse(level, field)
        .into_iter()
        .map(|order| {
            let trace = q as i64 + 1 - order as i64;
            let verdict = admissible_trace(trace, field);
            CandidateOrder {
                order,
                trace,
                admissible: verdict.admissible,
                condition: verdict.matched_condition,
            }
        })
        .collect();
    let surviving = candidates
        .iter()
        .filter(|c| c.admissible)
        .map(|c| c.order)
        .collect();
    Ok(ResidueField {
        residue_degree,
        q,
        hasse_interval: [lo, hi],
        candidates,
        surviving,
    })
}

/// Good reduction with a point of order `N` would force `N | |E~(F_{p^f})|`
/// for some `f <= d`; passes when no such group order is realizable by a
/// Hasse-admissible and Waterhouse-admissible trace.
pub fn good_reduction_obstruction(
    level: u64,
    prime: u64,
    degree: u32,
) -> Result<CertificateStep, ObstructionError> {
    if level == 0 {
        return Err(ObstructionError::ZeroLevel);
    }
    let residue_fields = (1..=degree)
        .map(|f| residue_field_analysis(level, prime, f))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = residue_fields.iter().all(|r| r.surviving.is_empty());
    Ok(CertificateStep {
        name: StepName::GoodReduction,
        kind: StepKind::ComputedCheck,
        statement: format!(
            "good reduction is impossible: no admissible order of E(F_{prime}^f), 1 <= f <= {degree}, is divisible by {level}"
        ),
        status: status(ok),
        evidence: Evidence::GoodReduction { residue_fields },
        citation: Some(
            "Hasse bound; Waterhouse, Abelian varieties over finite fields (1969), Theorem 4.1"
                .into(),
        ),
    })
}

fn hypotheses_step(level: u64, prime: u64) -> CertificateStep {
    let level_exceeds_four = level > 4;
    let prime_is_odd = prime > 2;
    let prime_coprime_to_level = !level.is_multiple_of(prime);
    CertificateStep {
        name: StepName::Hypotheses,
        kind: StepKind::ComputedCheck,
        statement: format!("N = {level} > 4, p = {prime} > 2, and p does not divide N"),
        status: status(level_exceeds_four && prime_is_odd && prime_coprime_to_level),
        evidence: Evidence::Hypotheses {
            level_exceeds_four,
            prime_is_odd,
            prime_coprime_to_level,
        },
        citation: None,
    }
}

fn gonality_step(level: u64, degree: u32) -> Result<CertificateStep, ObstructionError> {
    let exceeds = gonality_exceeds(level, degree)?;
    let listed_levels = crate::modcurve::GonalityTable::standard()
        .list(degree)?
        .to_vec();
    Ok(CertificateStep {
        name: StepName::GonalityGate,
        kind: StepKind::TablePremise,
        statement: format!("Gon(X_1({level})) > {degree}"),
        status: status(exceeds),
        evidence: Evidence::Gonality {
            level,
            degree,
            listed_levels,
            exceeds,
        },
        citation: Some(
            "genus-0 levels; Ishii-Momose (hyperelliptic X_1(N)); Jeon-Kim-Schweizer (trigonal X_1(N))"
                .into(),
        ),
    })
}

fn finiteness_step(level: u64) -> CertificateStep {
    let table = DecompositionTable::embedded();
    let row = table.row(level);
    let outcome = table.finiteness(level);
    let genus = if level >= 5 {
        genus_x1(level).ok()
    } else {
        None
    };
    CertificateStep {
        name: StepName::FinitenessGate,
        kind: StepKind::TablePremise,
        statement: format!("J_1({level})(Q) is finite: L(A, 1) != 0 for every factor A of J_1({level})"),
        status: status(outcome.is_finite()),
        evidence: Evidence::Decomposition {
            level,
            outcome,
            factors: row.map(|r| r.factors.clone()).unwrap_or_default(),
            total_dimension: row.map(|r| r.total_dimension()),
            genus,
        },
        citation: Some(
            "decomposition of J_1(N) into modular abelian varieties; Kato: L(A, 1) != 0 implies A(Q) finite"
                .into(),
        ),
    }
}

fn premise_step(premise: Premise) -> CertificateStep {
    CertificateStep {
        name: StepName::Premise(premise),
        kind: StepKind::TheoremPremise,
        statement: format!("assumed theorem: {}", premise.statement()),
        status: StepStatus::Pass,
        evidence: Evidence::None,
        citation: Some(premise.citation().into()),
    }
}

fn validate(level: u64, degree: u32, prime: u64) -> Result<(), ObstructionError> {
    if level == 0 {
        return Err(ObstructionError::ZeroLevel);
    }
    if degree == 0 || degree > MAX_SUPPORTED_DEGREE {
        return Err(ObstructionError::UnsupportedDegree(degree));
    }
    if !is_prime(prime) {
        return Err(ObstructionError::NotPrime(prime));
    }
    Ok(())
}

/// Builds the full certificate for `Z/NZ` over fields of degree `d`, reducing
/// at a prime above `p`.
pub fn check_torsion(
    level: u64,
    degree: u32,
    prime: u64,
) -> Result<ObstructionCertificate, ObstructionError> {
    validate(level, degree, prime)?;
    let mut steps = vec![
        hypotheses_step(level, prime),
        gonality_step(level, degree)?,
        finiteness_step(level),
        additive_reduction_impossible(level, prime, degree),
    ];
    steps.extend(Premise::ALL.iter().copied().map(premise_step));
    if level.is_multiple_of(prime) {
        steps.push(CertificateStep {
            name: StepName::GoodReduction,
            kind: StepKind::ComputedCheck,
            statement: format!("good reduction analysis requires p = {prime} not dividing N = {level}"),
            status: StepStatus::Fail,
            evidence: Evidence::Skipped {
                reason: format!("{prime} divides {level}: reduction of a point of order N need not keep order N"),
            },
            citation: None,
        });
    } else {
        steps.push(good_reduction_obstruction(level, prime, degree)?);
    }
    let verdict = if steps.iter().all(CertificateStep::passed) {
        Verdict::RuledOut
    } else {
        Verdict::Inconclusive
    };
    Ok(ObstructionCertificate {
        level,
        degree,
        prime,
        steps,
        verdict,
    })
}

/// Exhaustive scan of one residue field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldScan {
    pub q: u64,
    pub curves_scanned: u64,
    pub curves_with_point: u64,
    /// Coefficients `[a1, a2, a3, a4, a6]` of the first curve found, if any.
    pub example: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub level: u64,
    pub prime: u64,
    pub degree: u32,
    pub fields: Vec<FieldScan>,
}

impl CrossValidation {
    /// No enumerated curve over any residue field has a point of order `N`.
    pub fn confirmed(&self) -> bool {
        self.fields.iter().all(|f| f.curves_with_point == 0)
    }
}

/// Independent check of the good-reduction step: enumerate every curve over
/// `F_{p^f}`, `1 <= f <= d`, and look for a point of exact order `N` using the
/// group exponent.
pub fn cross_validation_scan(
    level: u64,
    prime: u64,
    degree: u32,
) -> Result<CrossValidation, ObstructionError> {
    if level == 0 {
        return Err(ObstructionError::ZeroLevel);
    }
    let mut fields = Vec::new();
    for f in 1..=degree {
        let field = make_field(prime, f)?;
        let scanned = FieldTable::new(&field)?.curves().count() as u64;
        let hits = curves_with_point_of_order(&field, level)?;
        fields.push(FieldScan {
            q: field.order() as u64,
            curves_scanned: scanned,
            curves_with_point: hits.len() as u64,
            example: hits.first().map(|c| {
                let [a1, a2, a3, a4, a6] = c.coefficients();
                format!("[{a1}, {a2}, {a3}, {a4}, {a6}]")
            }),
        });
    }
    Ok(CrossValidation {
        level,
        prime,
        degree,
        fields,
    })
}

/// `true` when no curve over any `F_{p^f}`, `f <= d`, has a point of order `N`.
pub fn cross_validate(level: u64, prime: u64, degree: u32) -> Result<bool, ObstructionError> {
    Ok(cross_validation_scan(level, prime, degree)?.confirmed())
}
