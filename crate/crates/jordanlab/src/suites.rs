//! Named verification suites bundling the published evidence for the
//! dimension conjectures.
//!
//! Each suite is a fixed list of cases; cases run in a parallel pool and
//! the report keeps the construction order, so repeated runs produce the
//! same result list. A case never panics on bad data: computation errors
//! become failed results, and comparisons against sources that are
//! themselves unproved or suspected of misprints are emitted with
//! report-only status.

use clap::ValueEnum;
use jordan_core::closed;
use jordan_core::conjecture::{
    char_cj, compare_tables, effectivity_violations, kernel_prediction_deg8, solve_characters,
};
use jordan_core::dims::{solve_weak, verify_reduction};
use jordan_core::oracle::{
    jacobi_triple_check, span_cj, span_inner_cj, span_inner_sj, span_sj, OracleConfig,
};
use jordan_core::partitions::{
    closed_dim_m, closed_dim_md, md_class_from_m, multilinear_m_class, multilinear_md_class,
    Partition, VirtualSymClass,
};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::report::{Provenance, VerificationResult};
use crate::tables::{format_class, format_diagram_map, format_seq};

/// Suite selector as it appears on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    PaperTables,
    OracleCross,
    Branching,
    Jacobi,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> &'static [Suite] {
        match self {
            SuiteArg::PaperTables => &[Suite::PaperTables],
            SuiteArg::OracleCross => &[Suite::OracleCross],
            SuiteArg::Branching => &[Suite::Branching],
            SuiteArg::Jacobi => &[Suite::Jacobi],
            SuiteArg::All => &Suite::ALL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PaperTables,
    OracleCross,
    Branching,
    Jacobi,
}

impl Suite {
    /// Execution order for `all`: cheap identities first, spans last.
    pub const ALL: [Suite; 4] = [
        Suite::Jacobi,
        Suite::PaperTables,
        Suite::Branching,
        Suite::OracleCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperTables => "paper-tables",
            Suite::OracleCross => "oracle-cross",
            Suite::Branching => "branching",
            Suite::Jacobi => "jacobi",
        }
    }
}

/// Bounds for suite runs. Cases outside the bounds are skipped, and each
/// family of checks additionally caps itself at the range its reference
/// values cover.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub d_max: u32,
    pub n_max: usize,
    pub force_envelope: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            d_max: 4,
            n_max: 8,
            force_envelope: false,
        }
    }
}

type Case = Box<dyn Fn() -> Vec<VerificationResult> + Send + Sync>;

/// Runs one suite; cases execute in parallel, the report keeps case order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<VerificationResult> {
    let cases = match suite {
        Suite::Jacobi => jacobi_cases(opts),
        Suite::PaperTables => paper_tables_cases(opts),
        Suite::Branching => branching_cases(opts),
        Suite::OracleCross => oracle_cross_cases(opts),
    };
    let mut grouped: Vec<Vec<VerificationResult>> = Vec::new();
    cases
        .into_par_iter()
        .map(|case| case())
        .collect_into_vec(&mut grouped);
    grouped.into_iter().flatten().collect()
}

pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> Vec<VerificationResult> {
    suites.iter().flat_map(|s| run_suite(*s, opts)).collect()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "agree"
    } else {
        "differ"
    }
}

fn jacobi_cases(_opts: &SuiteOptions) -> Vec<Case> {
    const SUITE: &str = "jacobi";
    const ORDER: usize = 50;
    vec![Box::new(|| match jacobi_triple_check(ORDER) {
        Ok(rep) => vec![
            VerificationResult::check(
                SUITE,
                format!("triple product in string form holds to order {ORDER}"),
                Provenance::Published,
                "agree",
                verdict(rep.product_matches),
            ),
            VerificationResult::check(
                SUITE,
                "residue extracting the trivial string from the product is 1",
                Provenance::Published,
                "agree",
                verdict(rep.residue0_is_one),
            ),
            VerificationResult::check(
                SUITE,
                "residue extracting the adjoint string from the product is -z",
                Provenance::Published,
                "agree",
                verdict(rep.residue2_is_neg_z),
            ),
        ],
        Err(e) => vec![VerificationResult::from_error(
            SUITE,
            "triple product in string form",
            Provenance::Published,
            "agree",
            e,
        )],
    })]
}

fn paper_tables_cases(opts: &SuiteOptions) -> Vec<Case> {
    const SUITE: &str = "paper-tables";
    let d_max = opts.d_max;
    let n_max = opts.n_max;
    let force = opts.force_envelope;
    let mut cases: Vec<Case> = Vec::new();

    cases.push(Box::new(move || {
        let n = n_max.max(30);
        match solve_weak(1, n) {
            Ok(t) => {
                let ok = t.a.iter().all(|v| *v == BigInt::from(1))
                    && t.b.iter().all(|v| *v == BigInt::from(0));
                vec![VerificationResult::check(
                    SUITE,
                    format!("one generator: a_n = 1 and b_n = 0 through degree {n}"),
                    Provenance::Published,
                    "confirmed",
                    if ok { "confirmed" } else { "violated" },
                )]
            }
            Err(e) => vec![VerificationResult::from_error(
                SUITE,
                "one generator baseline",
                Provenance::Published,
                "confirmed",
                e,
            )],
        }
    }));

    if d_max >= 2 {
        cases.push(Box::new(move || {
            let n2 = n_max;
            let t = match solve_weak(2, n2) {
                Ok(t) => t,
                Err(e) => {
                    return vec![VerificationResult::from_error(
                        SUITE,
                        "two generator table",
                        Provenance::Published,
                        "solved",
                        e,
                    )]
                }
            };
            let s_seq: Vec<BigInt> = (1..=n2).map(|n| closed::s(n as u32, 2)).collect();
            let r_seq: Vec<BigInt> = (1..=n2).map(|n| closed::r(n as u32, 2)).collect();
            let mut out = vec![
                VerificationResult::check(
                    SUITE,
                    format!("two generators: a_n equals the bracelet count s_n(2), n <= {n2}"),
                    Provenance::Published,
                    format_seq(&s_seq),
                    format_seq(&t.a),
                ),
                VerificationResult::check(
                    SUITE,
                    format!("two generators: b_n equals the oriented pair count r_n(2), n <= {n2}"),
                    Provenance::Published,
                    format_seq(&r_seq),
                    format_seq(&t.b),
                ),
            ];
            if n2 >= 4 {
                out.push(VerificationResult::check(
                    SUITE,
                    "two generators: a_4",
                    Provenance::Derived,
                    "10",
                    t.a_at(4).to_string(),
                ));
            }
            if n2 >= 15 {
                out.push(VerificationResult::check(
                    SUITE,
                    "two generators: a_15",
                    Provenance::Derived,
                    "16512",
                    t.a_at(15).to_string(),
                ));
                out.push(VerificationResult::check(
                    SUITE,
                    "two generators: b_15",
                    Provenance::Derived,
                    "15288",
                    t.b_at(15).to_string(),
                ));
            }
            out
        }));
    }

    if d_max >= 3 {
        cases.push(Box::new(move || {
            let n3 = n_max.clamp(1, 8);
            let t = match solve_weak(3, n3) {
                Ok(t) => t,
                Err(e) => {
                    return vec![VerificationResult::from_error(
                        SUITE,
                        "three generator table",
                        Provenance::Published,
                        "solved",
                        e,
                    )]
                }
            };
            let cap = n3.min(7);
            let s_seq: Vec<BigInt> = (1..=cap).map(|n| closed::s(n as u32, 3)).collect();
            let r_seq: Vec<BigInt> = (1..=n3).map(|n| closed::r(n as u32, 3)).collect();
            let mut out = vec![
                VerificationResult::check(
                    SUITE,
                    format!("three generators: a_n equals s_n(3), n <= {cap}"),
                    Provenance::Published,
                    format_seq(&s_seq),
                    format_seq(&t.a[..cap]),
                ),
                VerificationResult::check(
                    SUITE,
                    format!("three generators: b_n equals r_n(3), n <= {n3}"),
                    Provenance::Published,
                    format_seq(&r_seq),
                    format_seq(&t.b),
                ),
            ];
            if n3 >= 8 {
                let expected = closed::s(8, 3) + BigInt::from(3);
                out.push(VerificationResult::check(
                    SUITE,
                    "three generators: a_8 = s_8(3) + 3, the first kernel contribution",
                    Provenance::Published,
                    expected.to_string(),
                    t.a_at(8).to_string(),
                ));
            }
            out
        }));
    }

    if d_max >= 4 {
        cases.push(Box::new(move || {
            let n4 = n_max.clamp(1, 7);
            let t = match solve_weak(4, n4) {
                Ok(t) => t,
                Err(e) => {
                    return vec![VerificationResult::from_error(
                        SUITE,
                        "four generator table",
                        Provenance::Published,
                        "solved",
                        e,
                    )]
                }
            };
            let a_off: Vec<BigInt> = (1..=n4)
                .map(|n| t.a_at(n) - closed::s(n as u32, 4))
                .collect();
            let b_off: Vec<BigInt> = (1..=n4)
                .map(|n| t.b_at(n) - closed::r(n as u32, 4))
                .collect();
            let a_exp: Vec<BigInt> = [0i64, 0, 0, -1, -4, -20, -60][..n4]
                .iter()
                .map(|&v| BigInt::from(v))
                .collect();
            let b_exp: Vec<BigInt> = [0i64, 0, 0, 0, -4, -16, -80][..n4]
                .iter()
                .map(|&v| BigInt::from(v))
                .collect();
            vec![
                VerificationResult::check(
                    SUITE,
                    format!("four generators: a_n - s_n(4) offsets, n <= {n4}"),
                    Provenance::Published,
                    format_seq(&a_exp),
                    format_seq(&a_off),
                ),
                VerificationResult::check(
                    SUITE,
                    format!("four generators: b_n - r_n(4) offsets, n <= {n4}"),
                    Provenance::Published,
                    format_seq(&b_exp),
                    format_seq(&b_off),
                ),
            ]
        }));
    }

    for d in 1..=d_max.min(4) {
        cases.push(Box::new(move || {
            let n = n_max.min(20);
            match verify_reduction(d, n) {
                Ok(rep) => vec![VerificationResult::check(
                    SUITE,
                    format!("weakest form solves to the weak form table at D={d}, n <= {n}"),
                    Provenance::Published,
                    "consistent",
                    if rep.consistent() {
                        "consistent"
                    } else {
                        "inconsistent"
                    },
                )],
                Err(e) => vec![VerificationResult::from_error(
                    SUITE,
                    format!("weak against weakest at D={d}"),
                    Provenance::Published,
                    "consistent",
                    e,
                )],
            }
        }));
    }

    for d in 1..=d_max.min(4) {
        cases.push(Box::new(move || character_results(SUITE, d, n_max.min(7), force)));
    }

    if d_max >= 3 {
        cases.push(Box::new(move || {
            let case = "degree-8 kernel prediction at D=3 (unproved assertion)";
            let expected = "[3,3,2], dimension 3";
            match kernel_prediction_deg8() {
                Ok(kp) => {
                    let dim: BigInt = kp
                        .difference
                        .iter()
                        .map(|(p, v)| p.dim_gl(3) * v)
                        .sum();
                    vec![VerificationResult::report_only(
                        SUITE,
                        case,
                        Provenance::Published,
                        expected,
                        format!("{}, dimension {dim}", format_diagram_map(&kp.difference)),
                    )]
                }
                Err(e) => vec![VerificationResult::report_only(
                    SUITE,
                    case,
                    Provenance::Published,
                    expected,
                    format!("error: {e}"),
                )],
            }
        }));
    }

    cases.push(Box::new(move || {
        let cap = d_max.min(6);
        let mut negatives = Vec::new();
        for d in 1..=cap {
            match solve_weak(d, n_max) {
                Ok(t) => {
                    for (n, which) in t.negative_entries() {
                        negatives.push(format!("D={d} {which}_{n}"));
                    }
                }
                Err(e) => negatives.push(format!("D={d} error: {e}")),
            }
        }
        let computed = if negatives.is_empty() {
            "none".to_string()
        } else {
            negatives.join("; ")
        };
        vec![VerificationResult::report_only(
            SUITE,
            format!("negative solved entries for D <= {cap}, n <= {n_max}"),
            Provenance::Trivial,
            "none",
            computed,
        )]
    }));

    cases
}

/// Character-level checks at one generator count: the fixed point
/// re-substitutes, the solved table matches the trace route degree by
/// degree, the specialization reproduces the dimension table, and the
/// classes stay effective.
fn character_results(
    suite: &'static str,
    d: u32,
    n_max: usize,
    force: bool,
) -> Vec<VerificationResult> {
    let tables = match solve_characters(d, n_max, force) {
        Ok(t) => t,
        Err(e) => {
            return vec![VerificationResult::from_error(
                suite,
                format!("character tables at D={d}"),
                Provenance::Published,
                "solved",
                e,
            )]
        }
    };
    let mut out = Vec::new();
    match tables.resubstitution_check() {
        Ok(ok) => out.push(VerificationResult::check(
            suite,
            format!("character fixed point re-substitutes at D={d}, n <= {n_max}"),
            Provenance::Published,
            "fixed point reproduced",
            if ok {
                "fixed point reproduced"
            } else {
                "fixed point violated"
            },
        )),
        Err(e) => out.push(VerificationResult::from_error(
            suite,
            format!("character fixed point at D={d}"),
            Provenance::Published,
            "fixed point reproduced",
            e,
        )),
    }
    match compare_tables(&tables) {
        Ok(cmps) => {
            let cap = cmps.iter().map(|c| c.degree).max().unwrap_or(0);
            let bad: Vec<String> = cmps
                .iter()
                .filter(|c| !c.matches)
                .map(|c| c.degree.to_string())
                .collect();
            out.push(VerificationResult::check(
                suite,
                format!("A_n equals trace character minus tetrad character at D={d}, n <= {cap}"),
                Provenance::Published,
                "equal in every degree",
                if bad.is_empty() {
                    "equal in every degree".to_string()
                } else {
                    format!("differs in degrees {}", bad.join(", "))
                },
            ));
        }
        Err(e) => out.push(VerificationResult::from_error(
            suite,
            format!("trace route comparison at D={d}"),
            Provenance::Published,
            "equal in every degree",
            e,
        )),
    }
    match tables.specialize() {
        Ok((da, db)) => match solve_weak(d, n_max) {
            Ok(tbl) => {
                let same = (1..=n_max)
                    .all(|k| da.coeff(k) == tbl.a_at(k) && db.coeff(k) == tbl.b_at(k));
                out.push(VerificationResult::check(
                    suite,
                    format!("character tables specialize to the dimension tables at D={d}"),
                    Provenance::Derived,
                    "equal",
                    if same { "equal" } else { "unequal" },
                ));
            }
            Err(e) => out.push(VerificationResult::from_error(
                suite,
                format!("dimension table at D={d}"),
                Provenance::Derived,
                "equal",
                e,
            )),
        },
        Err(e) => out.push(VerificationResult::from_error(
            suite,
            format!("character specialization at D={d}"),
            Provenance::Derived,
            "equal",
            e,
        )),
    }
    match effectivity_violations(&tables) {
        Ok(v) if v.is_empty() => out.push(VerificationResult::report_only(
            suite,
            format!("conjectured classes stay effective at D={d}, n <= {n_max}"),
            Provenance::Published,
            "no negative multiplicities",
            "no negative multiplicities",
        )),
        Ok(v) => {
            let listed: Vec<String> = v
                .iter()
                .map(|(n, p, c, side)| format!("{side}_{n} has {c}[{p}]"))
                .collect();
            out.push(VerificationResult::report_only(
                suite,
                format!("conjectured classes stay effective at D={d}, n <= {n_max}"),
                Provenance::Published,
                "no negative multiplicities",
                listed.join("; "),
            ));
        }
        Err(e) => out.push(VerificationResult::report_only(
            suite,
            format!("conjectured classes stay effective at D={d}, n <= {n_max}"),
            Provenance::Published,
            "no negative multiplicities",
            format!("error: {e}"),
        )),
    }
    out
}

fn branching_cases(_opts: &SuiteOptions) -> Vec<Case> {
    const SUITE: &str = "branching";
    let mut cases: Vec<Case> = Vec::new();

    cases.push(Box::new(|| {
        let quoted: [(&[u32], i64); 6] = [
            (&[3, 1, 1, 1, 1], 15),
            (&[2, 2, 1, 1, 1], 14),
            (&[4, 1, 1, 1, 1], 35),
            (&[3, 2, 1, 1, 1], 64),
            (&[2, 2, 1, 1, 1, 1], 20),
            (&[3, 1, 1, 1, 1, 1], 21),
        ];
        let expected: Vec<BigInt> = quoted.iter().map(|(_, v)| BigInt::from(*v)).collect();
        let computed: Vec<BigInt> = quoted
            .iter()
            .map(|(p, _)| Partition::of(p).dim_sn())
            .collect();
        vec![VerificationResult::check(
            SUITE,
            "hook length dimensions quoted in the tetrad class analysis",
            Provenance::Published,
            format_seq(&expected),
            format_seq(&computed),
        )]
    }));

    cases.push(Box::new(|| {
        let computed = multilinear_m_class(7)
            .map(|c| c.dim().to_string())
            .unwrap_or_else(|e| format!("error: {e}"));
        vec![VerificationResult::check(
            SUITE,
            "seven letter tetrad class dimension 2*35 + 64 + 20 + 21",
            Provenance::Published,
            "175",
            computed,
        )]
    }));

    cases.push(Box::new(|| {
        let case = "restriction of the seven letter tetrad class";
        let expected = VirtualSymClass::from_terms(
            7,
            [
                (Partition::of(&[3, 1, 1, 1, 1]), BigInt::from(4)),
                (Partition::of(&[2, 1, 1, 1, 1, 1]), BigInt::from(2)),
                (Partition::of(&[2, 2, 1, 1, 1]), BigInt::from(2)),
                (Partition::of(&[4, 1, 1, 1]), BigInt::from(2)),
                (Partition::of(&[3, 2, 1, 1]), BigInt::from(1)),
            ],
        )
        .expect("terms share the size");
        match multilinear_m_class(7) {
            Ok(m7) => vec![VerificationResult::check(
                SUITE,
                case,
                Provenance::Published,
                format_class(&expected),
                format_class(&m7.restrict()),
            )],
            Err(e) => vec![VerificationResult::from_error(
                SUITE,
                case,
                Provenance::Published,
                format_class(&expected),
                e,
            )],
        }
    }));

    cases.push(Box::new(|| {
        let case = "inner gap class from the four letter tetrad class";
        match multilinear_m_class(4) {
            Ok(m4) => vec![VerificationResult::check(
                SUITE,
                case,
                Provenance::Published,
                "[2,1,1,1]",
                format_class(&md_class_from_m(&m4)),
            )],
            Err(e) => vec![VerificationResult::from_error(
                SUITE,
                case,
                Provenance::Published,
                "[2,1,1,1]",
                e,
            )],
        }
    }));

    cases.push(Box::new(|| {
        let dim = |d: u32| {
            multilinear_md_class(d)
                .map(|c| c.dim().to_string())
                .unwrap_or_else(|e| format!("error: {e}"))
        };
        vec![
            VerificationResult::check(
                SUITE,
                "seven letter inner gap dimension from the class equation",
                Provenance::Derived,
                "180",
                dim(7),
            ),
            VerificationResult::check(
                SUITE,
                "eight letter inner gap dimension from the class equation",
                Provenance::Derived,
                "1225",
                dim(8),
            ),
        ]
    }));

    cases.push(Box::new(|| {
        let case = "eight letter inner gap class against the printed decomposition";
        // The printed list, token for token. One token, 2^2,4, is not a
        // weakly decreasing diagram; its dimension is counted below by the
        // nearest reading (4,2,2), and the list repeats 2,1^6 twice.
        let printed: [(&[u32], i64); 10] = [
            (&[4, 1, 1, 1, 1], 4),
            (&[3, 2, 1, 1, 1], 6),
            (&[4, 2, 2], 1),
            (&[3, 1, 1, 1, 1, 1], 5),
            (&[2, 1, 1, 1, 1, 1, 1], 2),
            (&[2, 1, 1, 1, 1, 1, 1], 2),
            (&[2, 2, 2, 1, 1], 2),
            (&[3, 3, 1, 1], 1),
            (&[4, 2, 1, 1], 3),
            (&[5, 1, 1, 1], 2),
        ];
        let printed_dim: BigInt = printed
            .iter()
            .map(|(p, c)| Partition::of(p).dim_sn() * BigInt::from(*c))
            .sum();
        let expected = format!(
            "4[4,1,1,1,1] + 6[3,2,1,1,1] + [2^2,4] + 5[3,1,1,1,1,1] + 2[2,1,1,1,1,1,1] \
             + 2[2,1,1,1,1,1,1] + 2[2,2,2,1,1] + [3,3,1,1] + 3[4,2,1,1] + 2[5,1,1,1], \
             total {printed_dim} reading [2^2,4] as [4,2,2]"
        );
        match multilinear_md_class(8) {
            Ok(md8) => {
                let computed = format!("{}, total {}", format_class(&md8), md8.dim());
                vec![VerificationResult::report_only(
                    SUITE,
                    case,
                    Provenance::Published,
                    expected,
                    computed,
                )]
            }
            Err(e) => vec![VerificationResult::report_only(
                SUITE,
                case,
                Provenance::Published,
                expected,
                format!("error: {e}"),
            )],
        }
    }));

    cases
}

fn oracle_cross_cases(opts: &SuiteOptions) -> Vec<Case> {
    const SUITE: &str = "oracle-cross";
    let d_max = opts.d_max;
    let n_max = opts.n_max;
    let mut cases: Vec<Case> = Vec::new();

    for d in 1..=d_max.min(4) {
        let feasible: usize = if d <= 3 { 7 } else { 6 };
        let n_cap = feasible.min(n_max);
        if n_cap == 0 {
            continue;
        }
        cases.push(Box::new(move || full_degree_results(SUITE, d, n_cap)));
    }

    for d in 4..=d_max.min(7) {
        cases.push(Box::new(move || multilinear_results(SUITE, d)));
    }

    for d in 1..=d_max.min(3) {
        let n_cap = n_max.min(6);
        if n_cap == 0 {
            continue;
        }
        cases.push(Box::new(move || weight_character_results(SUITE, d, n_cap)));
    }

    cases
}

/// Full-degree span ranks against the closed counts: the reversal-fixed
/// span matches the bracelet count, the special span leaves exactly the
/// closed tetrad cokernel, and the inner-derivation spans reproduce the
/// oriented pair count and the closed gap formula.
fn full_degree_results(suite: &'static str, d: u32, n_cap: usize) -> Vec<VerificationResult> {
    let cfg = OracleConfig::default();
    let mut out = Vec::new();
    let boxed = |r: Result<Vec<VerificationResult>, jordan_core::oracle::OracleError>,
                 case: String| match r {
        Ok(v) => v,
        Err(e) => vec![VerificationResult::from_error(
            suite,
            case,
            Provenance::Published,
            "computed",
            e,
        )],
    };

    let cj = (|| {
        let mut ranks = Vec::new();
        let mut expect = Vec::new();
        for n in 1..=n_cap {
            ranks.push(BigInt::from(span_cj(n, d, None, &cfg)?.rank()));
            expect.push(closed::s(n as u32, d));
        }
        Ok(vec![VerificationResult::check(
            suite,
            format!("reversal-fixed span ranks equal s_n({d}), n <= {n_cap}"),
            Provenance::Published,
            format_seq(&expect),
            format_seq(&ranks),
        )])
    })();
    out.extend(boxed(cj, format!("reversal-fixed span ranks at D={d}")));

    let sj = (|| {
        let mut ranks = Vec::new();
        let mut expect = Vec::new();
        for n in 1..=n_cap {
            ranks.push(BigInt::from(span_sj(n, d, None, &cfg)?.rank()));
            let m = closed_dim_m(n as u32, d).expect("cap keeps the formula range");
            expect.push(closed::s(n as u32, d) - m);
        }
        Ok(vec![VerificationResult::check(
            suite,
            format!("special span ranks equal s_n({d}) minus the tetrad cokernel, n <= {n_cap}"),
            Provenance::Derived,
            format_seq(&expect),
            format_seq(&ranks),
        )])
    })();
    out.extend(boxed(sj, format!("special span ranks at D={d}")));

    let inner = (|| {
        let mut cj_ranks = Vec::new();
        let mut r_expect = Vec::new();
        let mut gaps = Vec::new();
        let mut gap_expect = Vec::new();
        let mut contained = true;
        for n in 1..=n_cap {
            let icj = span_inner_cj(n, d, None, &cfg)?;
            let isj = span_inner_sj(n, d, None, &cfg)?;
            contained &= icj.contains(&isj)?;
            cj_ranks.push(BigInt::from(icj.rank()));
            r_expect.push(closed::r(n as u32, d));
            gaps.push(BigInt::from(icj.rank() - isj.rank()));
            gap_expect.push(closed_dim_md(n as u32, d).expect("cap keeps the formula range"));
        }
        Ok(vec![
            VerificationResult::check(
                suite,
                format!("inner derivation span of the reversal-fixed algebra has rank r_n({d}), n <= {n_cap}"),
                Provenance::Published,
                format_seq(&r_expect),
                format_seq(&cj_ranks),
            ),
            VerificationResult::check(
                suite,
                format!("inner derivation gap equals the closed formula at D={d}, n <= {n_cap}"),
                Provenance::Derived,
                format_seq(&gap_expect),
                format_seq(&gaps),
            ),
            VerificationResult::check(
                suite,
                format!("special inner span lies inside the reversal-fixed inner span at D={d}"),
                Provenance::Trivial,
                "contained",
                if contained { "contained" } else { "not contained" },
            ),
        ])
    })();
    out.extend(boxed(inner, format!("inner derivation spans at D={d}")));

    out
}

/// Multilinear span ranks at degree `d` over `d` generators. The
/// reversal-fixed rank is d!/2; the special rank leaves the multilinear
/// tetrad class dimension; for five and seven letters the inner ranks are
/// pinned to independently derived values.
fn multilinear_results(suite: &'static str, d: u32) -> Vec<VerificationResult> {
    let cfg = OracleConfig::default();
    let ones = vec![1u32; d as usize];
    let n = d as usize;
    let mut out = Vec::new();

    let half_factorial: BigInt = (1..=u64::from(d)).map(BigInt::from).product::<BigInt>() / 2;
    match span_cj(n, d, Some(&ones), &cfg) {
        Ok(b) => out.push(VerificationResult::check(
            suite,
            format!("multilinear reversal-fixed rank is {d}!/2"),
            Provenance::Published,
            half_factorial.to_string(),
            b.rank().to_string(),
        )),
        Err(e) => out.push(VerificationResult::from_error(
            suite,
            format!("multilinear reversal-fixed span at D={d}"),
            Provenance::Published,
            half_factorial.to_string(),
            e,
        )),
    }

    let m_dim = match multilinear_m_class(d) {
        Ok(c) => c.dim(),
        Err(e) => {
            out.push(VerificationResult::from_error(
                suite,
                format!("multilinear tetrad class at D={d}"),
                Provenance::Published,
                "computed",
                e,
            ));
            return out;
        }
    };
    match span_sj(n, d, Some(&ones), &cfg) {
        Ok(b) => {
            let rank = BigInt::from(b.rank());
            out.push(VerificationResult::check(
                suite,
                format!("multilinear special rank leaves the tetrad class dimension at D={d}"),
                Provenance::Derived,
                (&half_factorial - &m_dim).to_string(),
                rank.to_string(),
            ));
            out.push(VerificationResult::check(
                suite,
                format!("multilinear tetrad cokernel dimension at D={d}"),
                Provenance::Published,
                m_dim.to_string(),
                (&half_factorial - &rank).to_string(),
            ));
        }
        Err(e) => out.push(VerificationResult::from_error(
            suite,
            format!("multilinear special span at D={d}"),
            Provenance::Derived,
            (&half_factorial - &m_dim).to_string(),
            e,
        )),
    }

    if d >= 5 {
        let inner = (|| {
            let icj = span_inner_cj(n, d, Some(&ones), &cfg)?;
            let isj = span_inner_sj(n, d, Some(&ones), &cfg)?;
            let contained = icj.contains(&isj)?;
            let mut v = Vec::new();
            let gap_dim = multilinear_md_class(d)
                .map(|c| c.dim().to_string())
                .unwrap_or_else(|e| format!("error: {e}"));
            v.push(VerificationResult::check(
                suite,
                format!("multilinear inner derivation gap equals the class dimension at D={d}"),
                Provenance::Derived,
                gap_dim,
                (icj.rank() - isj.rank()).to_string(),
            ));
            let anchors: &[(usize, usize)] = match d {
                5 => &[(48, 44)],
                7 => &[(2160, 1980)],
                _ => &[],
            };
            for &(cj_exp, sj_exp) in anchors {
                v.push(VerificationResult::check(
                    suite,
                    format!("multilinear reversal-fixed inner rank at D={d}"),
                    Provenance::Derived,
                    cj_exp.to_string(),
                    icj.rank().to_string(),
                ));
                v.push(VerificationResult::check(
                    suite,
                    format!("multilinear special inner rank at D={d}"),
                    Provenance::Derived,
                    sj_exp.to_string(),
                    isj.rank().to_string(),
                ));
            }
            v.push(VerificationResult::check(
                suite,
                format!("multilinear special inner span is contained at D={d}"),
                Provenance::Trivial,
                "contained",
                if contained { "contained" } else { "not contained" },
            ));
            Ok::<_, jordan_core::oracle::OracleError>(v)
        })();
        match inner {
            Ok(v) => out.extend(v),
            Err(e) => out.push(VerificationResult::from_error(
                suite,
                format!("multilinear inner spans at D={d}"),
                Provenance::Derived,
                "computed",
                e,
            )),
        }
    }

    out
}

/// Weight-space dimensions of the reversal-fixed span against the
/// coefficients of its trace character, multidegree by multidegree.
fn weight_character_results(suite: &'static str, d: u32, n_cap: usize) -> Vec<VerificationResult> {
    let cfg = OracleConfig::default();
    let case = format!("weight spaces match the trace character coefficients at D={d}, n <= {n_cap}");
    let run = || -> Result<String, String> {
        let mut checked = 0usize;
        for n in 1..=n_cap {
            let weight = span_cj(n, d, None, &cfg).map_err(|e| e.to_string())?;
            let trace = char_cj(n as u64, d, n).map_err(|e| e.to_string())?;
            let weight = weight.weight_character();
            let mut total = 0u64;
            for (m, count) in &weight {
                let mut parts: Vec<u32> = m.iter().copied().filter(|&x| x > 0).collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let coeff = trace.coeff(&Partition::of(&parts), 0);
                if coeff != BigInt::from(*count) {
                    return Err(format!("n={n} multidegree {m:?}: {count} against {coeff}"));
                }
                total += count;
                checked += 1;
            }
            if BigInt::from(total) != closed::s(n as u32, d) {
                return Err(format!("n={n}: weight total {total} misses the bracelet count"));
            }
        }
        Ok(format!("all coefficients agree ({checked} weights)"))
    };
    match run() {
        Ok(msg) => vec![VerificationResult::check(
            suite,
            case,
            Provenance::Derived,
            msg.clone(),
            msg,
        )],
        Err(e) => vec![VerificationResult::check(
            suite,
            case,
            Provenance::Derived,
            "all coefficients agree",
            e,
        )],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn jacobi_suite_passes() {
        let results = run_suite(Suite::Jacobi, &SuiteOptions::default());
        assert_eq!(results.len(), 3);
        assert!(results.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn branching_suite_passes_with_one_report() {
        let results = run_suite(Suite::Branching, &SuiteOptions::default());
        assert!(results.iter().all(|r| !r.is_hard_failure()));
        let reports: Vec<_> = results
            .iter()
            .filter(|r| r.status == Status::ReportOnly)
            .collect();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].expected != reports[0].computed);
    }

    #[test]
    fn paper_tables_suite_small_range() {
        let opts = SuiteOptions {
            d_max: 2,
            n_max: 6,
            force_envelope: false,
        };
        let results = run_suite(Suite::PaperTables, &opts);
        assert!(results.iter().all(|r| !r.is_hard_failure()));
        assert!(results.iter().any(|r| r.suite == "paper-tables"));
    }

    #[test]
    fn oracle_suite_small_range() {
        let opts = SuiteOptions {
            d_max: 2,
            n_max: 4,
            force_envelope: false,
        };
        let results = run_suite(Suite::OracleCross, &opts);
        assert!(results.iter().all(|r| !r.is_hard_failure()));
    }

    #[test]
    fn suite_arg_resolves_all() {
        assert_eq!(SuiteArg::All.suites().len(), 4);
        assert_eq!(SuiteArg::Jacobi.suites(), &[Suite::Jacobi]);
        assert_eq!(Suite::PaperTables.name(), "paper-tables");
    }
}
