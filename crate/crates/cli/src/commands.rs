use std::collections::BTreeMap;

use ismzv::maps::{CoefficientMap, QAnalogueMap, QuasiSymmetricMap, RationalMap};
use ismzv::qseries::QSeriesRing;
use ismzv::schur::{linear_value, schur_value, DiagonalWeightSequence};
use ismzv::shapes::enumerate_oyt;
use ismzv::verify::{self, Diagonals, Identity, SweepConfig, SweepReport};
use ismzv::{Partition, PolyRing, Ring, ShapedTableau};
use serde_json::{json, Value};

use crate::options::Options;
use crate::Failure;

const DEFAULT_SEED: u64 = 7;

/// What a command produced: the JSON document, whether every check passed,
/// and summary lines for standard error.
pub struct Outcome {
    pub document: Value,
    pub pass: bool,
    pub summary: Vec<String>,
}

impl Outcome {
    fn value(document: Value) -> Self {
        Outcome {
            document,
            pass: true,
            summary: Vec::new(),
        }
    }

    fn reports(reports: Vec<SweepReport>, mut summary: Vec<String>) -> Self {
        let pass = reports.iter().all(|r| r.pass);
        for r in &reports {
            summary.push(r.summary());
            for failure in r.failures() {
                let text = serde_json::to_string(failure).expect("instances serialize");
                summary.push(format!("  FAILED {text}"));
            }
        }
        let document = json!({ "pass": pass, "reports": reports });
        Outcome {
            document,
            pass,
            summary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RingChoice {
    Rational,
    QSeries(usize),
    QSym,
}

fn parse_ring(s: Option<&str>) -> Result<RingChoice, Failure> {
    match s.unwrap_or("rational") {
        "rational" => Ok(RingChoice::Rational),
        "qsym" => Ok(RingChoice::QSym),
        other => {
            let order = other
                .strip_prefix("qseries:")
                .and_then(|q| q.parse::<usize>().ok())
                .ok_or_else(|| {
                    Failure::Input(format!(
                        "unknown ring {other:?}; use rational, qseries:Q or qsym"
                    ))
                })?;
            Ok(RingChoice::QSeries(order))
        }
    }
}

/// Bounds used when the options leave them open; the series rings get the
/// smaller defaults and positive weights.
struct Defaults {
    rational: bool,
}

impl Defaults {
    fn weights(&self) -> (i64, i64) {
        if self.rational {
            (-2, 3)
        } else {
            (1, 3)
        }
    }
}

macro_rules! with_map {
    ($choice:expr, $f:ident => $body:expr) => {
        match $choice {
            RingChoice::Rational => {
                let $f = RationalMap::new();
                $body
            }
            RingChoice::QSeries(order) => {
                let $f = QAnalogueMap::new(QSeriesRing::new(order)?);
                $body
            }
            RingChoice::QSym => {
                let $f = QuasiSymmetricMap::new();
                $body
            }
        }
    };
}

fn require_n(opts: &Options) -> Result<usize, Failure> {
    opts.n
        .ok_or_else(|| Failure::Input("--N is required".into()))
}

fn weight_tableau(opts: &Options) -> Result<ShapedTableau<i64>, Failure> {
    let shape = opts.shape();
    match (opts.entries.as_ref(), opts.diagonal()) {
        (Some(_), Some(_)) => Err(Failure::Input(
            "give either --entries or --diagonal, not both".into(),
        )),
        (Some(rows), None) => {
            let k = ShapedTableau::from_rows(rows.0.clone())?;
            if let Some(s) = shape {
                if s != k.shape() {
                    return Err(Failure::Input(format!(
                        "--entries has shape {} but --shape is {s}",
                        k.shape()
                    )));
                }
            }
            Ok(k)
        }
        (None, Some(a)) => {
            let s = shape.ok_or_else(|| Failure::Input("--diagonal needs --shape".into()))?;
            Ok(a.tableau(s)?)
        }
        (None, None) => match shape {
            Some(s) if s.is_empty() => Ok(ShapedTableau::new(s.clone(), Vec::new())?),
            Some(s) => Err(Failure::Input(format!(
                "shape {s} needs --entries or --diagonal"
            ))),
            None => Err(Failure::Input(
                "compute needs --keys, or --shape with weights".into(),
            )),
        },
    }
}

pub fn compute(opts: &Options) -> Result<Outcome, Failure> {
    let n = require_n(opts)?;
    let choice = parse_ring(opts.ring.as_deref())?;
    with_map!(choice, f => compute_with(opts, n, &f))
}

fn compute_with<F: CoefficientMap>(opts: &Options, n: usize, f: &F) -> Result<Outcome, Failure> {
    let pr = PolyRing::new(f.ring().clone());
    let mut doc = BTreeMap::new();
    doc.insert("ring", json!(f.name()));
    doc.insert("N", json!(n));
    let value = if let Some(keys) = &opts.keys {
        if opts.shape.is_some() || opts.entries.is_some() {
            return Err(Failure::Input(
                "--keys cannot be combined with --shape or --entries".into(),
            ));
        }
        doc.insert("keys", json!(keys.0));
        linear_value(&keys.0, n, f)?
    } else {
        let k = weight_tableau(opts)?;
        doc.insert("shape", json!(k.shape()));
        doc.insert("entries", json!(k.rows()));
        schur_value(&k, n, f)?
    };
    doc.insert("coefficients", pr.to_json(&value));
    Ok(Outcome::value(json!(doc)))
}

pub fn oyt_count(opts: &Options) -> Result<Outcome, Failure> {
    let n = require_n(opts)?;
    let shape = opts
        .shape()
        .ok_or_else(|| Failure::Input("--shape is required".into()))?;
    let mut by_equalities: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut count = 0u64;
    for m in enumerate_oyt(shape, n) {
        count += 1;
        *by_equalities.entry((m.v_count, m.h_count)).or_default() += 1;
    }
    let groups: Vec<Value> = by_equalities
        .into_iter()
        .map(|((v, h), c)| json!({ "v": v, "h": h, "count": c }))
        .collect();
    Ok(Outcome::value(
        json!({ "shape": shape, "N": n, "count": count, "by_equalities": groups }),
    ))
}

pub fn verify(identities: &[Identity], opts: &Options) -> Result<Outcome, Failure> {
    let choice = parse_ring(opts.ring.as_deref())?;
    let defaults = Defaults {
        rational: choice == RingChoice::Rational,
    };
    let mut reports = Vec::new();
    let mut notes = Vec::new();
    for &identity in identities {
        if identity == Identity::Oracles && !defaults.rational {
            if identities.len() == 1 {
                return Err(Failure::Input(
                    "the oracle comparison is defined over the rationals only".into(),
                ));
            }
            notes.push("oracles: skipped, rational ring only".to_string());
            continue;
        }
        let report = with_map!(choice, f => verify_with(identity, opts, &defaults, &f))?;
        reports.push(report);
    }
    Ok(Outcome::reports(reports, notes))
}

fn n_values(opts: &Options, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    opts.n.map_or_else(|| default.collect(), |n| vec![n])
}

fn diagonals(opts: &Options, defaults: &Defaults, draws: u64) -> Diagonals {
    match opts.diagonal() {
        Some(a) => Diagonals::Fixed(a.clone()),
        None => {
            let (lo, hi) = defaults.weights();
            Diagonals::Random {
                seed: opts.seed.unwrap_or(DEFAULT_SEED),
                count: opts.draws.unwrap_or(draws),
                lo,
                hi,
            }
        }
    }
}

/// The requested shape, or every shape up to the size bound; with fixed
/// diagonal weights only the shapes those weights cover.
fn shapes(opts: &Options, default_max: usize) -> Vec<Partition> {
    if let Some(s) = opts.shape() {
        return vec![s.clone()];
    }
    let all = Partition::all_up_to_size(opts.max_cells.unwrap_or(default_max));
    match opts.diagonal() {
        Some(a) => all
            .into_iter()
            .filter(|s| DiagonalWeightSequence::required_offsets(s).all(|d| a.get(d).is_ok()))
            .collect(),
        None => all,
    }
}

fn verify_with<F: CoefficientMap>(
    identity: Identity,
    opts: &Options,
    defaults: &Defaults,
    f: &F,
) -> Result<SweepReport, Failure> {
    let rational = defaults.rational;
    let report = match identity {
        Identity::JacobiTrudi | Identity::Conjugation => {
            let config = SweepConfig {
                shapes: shapes(opts, if rational { 6 } else { 4 }),
                n_values: n_values(opts, if rational { 2..=5 } else { 1..=4 }),
                diagonals: diagonals(opts, defaults, if rational { 5 } else { 3 }),
            };
            if identity == Identity::JacobiTrudi {
                verify::sweep_jacobi_trudi(&config, f)?
            } else {
                verify::sweep_conjugation(&config, f)?
            }
        }
        Identity::Lgv => {
            let config = SweepConfig {
                shapes: shapes(opts, if rational { 5 } else { 4 }),
                n_values: n_values(opts, 1..=5),
                diagonals: diagonals(opts, defaults, 2),
            };
            verify::sweep_lgv(&config, f)?
        }
        Identity::SingleLayer => {
            let m_values: Vec<usize> = opts.m.map_or_else(|| (1..=4).collect(), |m| vec![m]);
            let diagonals = diagonals(opts, defaults, 2);
            if let Some(b) = &opts.b {
                let shape = opts
                    .shape()
                    .ok_or_else(|| Failure::Input("--b needs --shape".into()))?;
                let mut report = SweepReport::new(Identity::SingleLayer, f.name());
                let offsets = DiagonalWeightSequence::required_offsets(shape);
                for (suffix, a) in diagonals.draws(&shape.to_string(), offsets) {
                    for &m in &m_values {
                        let key = format!("shape={shape} b={:?} M={m}{suffix}", b.0);
                        report.push(verify::single_layer_instance(key, shape, &b.0, m, f, &a)?);
                    }
                }
                report
            } else {
                let config = SweepConfig {
                    shapes: shapes(opts, 5),
                    n_values: Vec::new(),
                    diagonals,
                };
                verify::sweep_single_layer(&config, &m_values, f)?
            }
        }
        Identity::PathSum => {
            let max_r = opts.max_cells.unwrap_or(4);
            let diagonals = diagonals(opts, defaults, 5);
            let start = match &diagonals {
                Diagonals::Fixed(a) => *a.window().keys().next().unwrap_or(&0),
                Diagonals::Random { .. } => -2,
            };
            verify::sweep_path_sums(max_r, &n_values(opts, 1..=6), start, &diagonals, f)?
        }
        Identity::Oracles => {
            let ns = n_values(opts, 1..=6);
            match &opts.keys {
                Some(keys) => {
                    let mut report = SweepReport::new(Identity::Oracles, f.name());
                    for &n in &ns {
                        report.push(verify::oracle_instance(&keys.0, n)?);
                    }
                    report
                }
                None => verify::sweep_oracles(opts.max_cells.unwrap_or(4), &ns, -1, 3)?,
            }
        }
        Identity::Palindrome => {
            let ns = n_values(opts, 1..=4);
            match &opts.keys {
                Some(keys) => {
                    if keys.0.is_empty() {
                        return Err(Failure::Input(
                            "the palindromic check needs at least one key".into(),
                        ));
                    }
                    let mut report = SweepReport::new(Identity::Palindrome, f.name());
                    for &n in &ns {
                        report.push(verify::palindrome_instance(&keys.0, n, f)?);
                    }
                    report
                }
                None => verify::sweep_palindrome(opts.max_cells.unwrap_or(3), &[2, 3], &ns, f)?,
            }
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_names() {
        assert_eq!(parse_ring(None).unwrap(), RingChoice::Rational);
        assert_eq!(
            parse_ring(Some("qseries:8")).unwrap(),
            RingChoice::QSeries(8)
        );
        assert_eq!(parse_ring(Some("qsym")).unwrap(), RingChoice::QSym);
        assert!(parse_ring(Some("qseries:x")).is_err());
        assert!(parse_ring(Some("real")).is_err());
    }

    #[test]
    fn failing_instances_are_reported() {
        let mut report = SweepReport::new(Identity::JacobiTrudi, "rational");
        report.push(verify::Instance {
            key: "bad".into(),
            pass: false,
            sides: BTreeMap::new(),
            notes: Vec::new(),
        });
        let outcome = Outcome::reports(vec![report], Vec::new());
        assert!(!outcome.pass);
        assert_eq!(outcome.document["pass"], false);
        assert!(outcome
            .summary
            .iter()
            .any(|l| l.contains("FAILED") && l.contains("\"bad\"")));
    }
}
