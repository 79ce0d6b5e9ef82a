//! Batch checks of the identities over finite families of instances.
//!
//! Each check produces an [`Instance`] holding both sides in JSON form; a
//! sweep collects them into a [`SweepReport`] in a fixed order. Random
//! diagonal weights come from a ChaCha stream seeded by the sweep seed and
//! the instance key, so reports depend only on the configuration.

use std::collections::BTreeMap;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::jacobi_trudi::{verify_jacobi_trudi, verify_palindromic_matrix};
use crate::lattice::{lemma45_check, path_weight_sum, schur_scenario, LatticeVertex, TLattice};
use crate::maps::{CoefficientMap, RationalMap};
use crate::ring::{RationalField, Ring};
use crate::schur::{
    linear_value, linear_value_by_recursion, merge_expansion, schur_value, DiagonalWeightSequence,
};
use crate::shapes::{BitTableau, Partition};
use crate::tpoly::{PolyRing, TPolynomial};

/// The identity families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    JacobiTrudi,
    Conjugation,
    Lgv,
    PathSum,
    SingleLayer,
    Oracles,
    Palindrome,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::JacobiTrudi,
        Identity::Conjugation,
        Identity::Lgv,
        Identity::PathSum,
        Identity::SingleLayer,
        Identity::Oracles,
        Identity::Palindrome,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::JacobiTrudi => "jacobi-trudi",
            Identity::Conjugation => "conjugation",
            Identity::Lgv => "lgv",
            Identity::PathSum => "path-sum",
            Identity::SingleLayer => "lemma45",
            Identity::Oracles => "oracles",
            Identity::Palindrome => "palindrome",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == s)
    }
}

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Instance {
    pub key: String,
    pub pass: bool,
    pub sides: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub identity: String,
    pub ring: String,
    pub checked: usize,
    pub passed: usize,
    pub pass: bool,
    pub instances: Vec<Instance>,
}

impl SweepReport {
    pub fn new(identity: Identity, ring: impl Into<String>) -> Self {
        SweepReport {
            identity: identity.name().to_string(),
            ring: ring.into(),
            checked: 0,
            passed: 0,
            pass: true,
            instances: Vec::new(),
        }
    }

    pub fn push(&mut self, instance: Instance) {
        self.checked += 1;
        if instance.pass {
            self.passed += 1;
        } else {
            self.pass = false;
        }
        self.instances.push(instance);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }

    /// One-line summary, e.g. `jacobi-trudi [rational]: 600/600 passed`.
    pub fn summary(&self) -> String {
        format!(
            "{} [{}]: {}/{} passed",
            self.identity, self.ring, self.passed, self.checked
        )
    }
}

/// Where a sweep takes its diagonal weights from.
#[derive(Debug, Clone, PartialEq)]
pub enum Diagonals {
    Fixed(DiagonalWeightSequence),
    /// `count` independent draws with values in `lo..=hi` per instance.
    Random {
        seed: u64,
        count: u64,
        lo: i64,
        hi: i64,
    },
}

impl Diagonals {
    /// The diagonal sequences to use for a given instance key, covering the
    /// offsets `offsets`.
    pub fn draws(
        &self,
        key: &str,
        offsets: std::ops::RangeInclusive<i64>,
    ) -> Vec<(String, DiagonalWeightSequence)> {
        match self {
            Diagonals::Fixed(a) => vec![(String::new(), a.clone())],
            Diagonals::Random {
                seed,
                count,
                lo,
                hi,
            } => (0..*count)
                .map(|s| {
                    let mut rng = ChaCha8Rng::seed_from_u64(mix(*seed, s, key));
                    let weights = offsets
                        .clone()
                        .map(|d| (d, rng.gen_range(*lo..=*hi)))
                        .collect();
                    (format!(" draw={s}"), DiagonalWeightSequence::new(weights))
                })
                .collect(),
        }
    }
}

/// FNV-1a over the key, combined with the seed and draw index.
fn mix(seed: u64, draw: u64, key: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in key
        .bytes()
        .chain(seed.to_le_bytes())
        .chain(draw.to_le_bytes())
    {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// A family of shapes, bounds and weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub shapes: Vec<Partition>,
    pub n_values: Vec<usize>,
    pub diagonals: Diagonals,
}

impl SweepConfig {
    /// Every partition with at most `max_cells` cells, for each `N` in
    /// `n_values`.
    pub fn up_to(
        max_cells: usize,
        n_values: impl IntoIterator<Item = usize>,
        diagonals: Diagonals,
    ) -> Self {
        SweepConfig {
            shapes: Partition::all_up_to_size(max_cells),
            n_values: n_values.into_iter().collect(),
            diagonals,
        }
    }
}

fn poly_json<R: Ring>(pr: &PolyRing<R>, p: &TPolynomial<R::Elem>) -> Value {
    pr.to_json(p)
}

fn diagonal_json(a: &DiagonalWeightSequence) -> Value {
    serde_json::to_value(a).expect("diagonal weights serialize")
}

fn sides(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Schur value against both determinant sides.
pub fn jacobi_trudi_instance<F: CoefficientMap>(
    key: String,
    shape: &Partition,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Instance> {
    let pr = PolyRing::new(f.ring().clone());
    let r = verify_jacobi_trudi(shape, n, f, a)?;
    Ok(Instance {
        key,
        pass: r.equal,
        sides: sides([
            ("diagonal", diagonal_json(a)),
            ("schur", poly_json(&pr, &r.schur)),
            ("detH", poly_json(&pr, &r.det_h)),
            ("detE", poly_json(&pr, &r.det_e)),
        ]),
        notes: r.notes,
    })
}

/// `ζ^{1−t}(k)` against `ζᵗ(k′)` for the diagonal-constant tableau.
pub fn conjugation_instance<F: CoefficientMap>(
    key: String,
    shape: &Partition,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Instance> {
    let pr = PolyRing::new(f.ring().clone());
    let k = a.tableau(shape)?;
    let reflected = pr.substitute_one_minus_t(&schur_value(&k, n, f)?);
    let transposed = schur_value(&k.conjugate(), n, f)?;
    Ok(Instance {
        key,
        pass: pr.eq(&reflected, &transposed),
        sides: sides([
            ("diagonal", diagonal_json(a)),
            ("reflected", poly_json(&pr, &reflected)),
            ("conjugate", poly_json(&pr, &transposed)),
        ]),
        notes: Vec::new(),
    })
}

/// Signed path-system sum, weight-matrix determinant and Schur value for
/// the Schur scenario of `λ`.
pub fn lgv_instance<F: CoefficientMap>(
    key: String,
    shape: &Partition,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Instance> {
    let pr = PolyRing::new(f.ring().clone());
    let schur = schur_value(&a.tableau(shape)?, n, f)?;
    let (signed, det) = if n == 0 || shape.is_empty() {
        (pr.one(), pr.one())
    } else {
        let (sources, sinks) = schur_scenario(shape, n);
        let all: Vec<LatticeVertex> = sources.iter().chain(&sinks).copied().collect();
        let lattice = TLattice::spanning(n, f, a, &all)?;
        (
            lattice.lgv_signed_sum(&sources, &sinks)?,
            lattice.lgv_determinant(&sources, &sinks)?,
        )
    };
    Ok(Instance {
        key,
        pass: pr.eq(&signed, &det) && pr.eq(&det, &schur),
        sides: sides([
            ("diagonal", diagonal_json(a)),
            ("signedSum", poly_json(&pr, &signed)),
            ("determinant", poly_json(&pr, &det)),
            ("schur", poly_json(&pr, &schur)),
        ]),
        notes: Vec::new(),
    })
}

/// `w(∘(i, N−1), ∘(j+1, 0))` against `ζᵗ_N(a_j, a_{j−1}, …, a_i)`.
pub fn path_sum_instance<F: CoefficientMap>(
    key: String,
    i: i64,
    j: i64,
    n: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Instance> {
    let pr = PolyRing::new(f.ring().clone());
    let keys = if j >= i { a.run(j, i)? } else { Vec::new() };
    let lattice = path_weight_sum(
        LatticeVertex::white(i, n - 1),
        LatticeVertex::white(j + 1, 0),
        n,
        f,
        a,
    )?;
    let linear = linear_value(&keys, n, f)?;
    Ok(Instance {
        key,
        pass: pr.eq(&lattice, &linear),
        sides: sides([
            ("keys", json!(keys)),
            ("pathSum", poly_json(&pr, &lattice)),
            ("linear", poly_json(&pr, &linear)),
        ]),
        notes: Vec::new(),
    })
}

pub fn single_layer_instance<F: CoefficientMap>(
    key: String,
    shape: &Partition,
    b: &[usize],
    m: usize,
    f: &F,
    a: &DiagonalWeightSequence,
) -> Result<Instance> {
    let pr = PolyRing::new(f.ring().clone());
    let r = lemma45_check(shape, b, m, f, a)?;
    Ok(Instance {
        key,
        pass: r.equal,
        sides: sides([
            ("diagonal", diagonal_json(a)),
            ("b", json!(b)),
            (
                "stats",
                serde_json::to_value(r.stats).expect("stats serialize"),
            ),
            ("signedSum", poly_json(&pr, &r.signed_sum)),
            ("predicted", poly_json(&pr, &r.predicted)),
        ]),
        notes: vec!["bit tableau read with f(i,j) = 1 iff i > b_j".into()],
    })
}

/// Direct chain sum, recursion and merge expansion for rational keys.
pub fn oracle_instance(keys: &[i64], n: usize) -> Result<Instance> {
    let f = RationalMap::new();
    let pr = PolyRing::new(RationalField);
    let direct = linear_value(keys, n, &f)?;
    let recursive = linear_value_by_recursion(keys, n, &f)?;
    let merged = merge_expansion(keys, n)?;
    Ok(Instance {
        key: format!("keys={keys:?} N={n}"),
        pass: direct == recursive && recursive == merged,
        sides: sides([
            ("direct", poly_json(&pr, &direct)),
            ("recursion", poly_json(&pr, &recursive)),
            ("merge", poly_json(&pr, &merged)),
        ]),
        notes: Vec::new(),
    })
}

pub fn palindrome_instance<F: CoefficientMap>(k: &[i64], n: usize, f: &F) -> Result<Instance> {
    let pr = PolyRing::new(f.ring().clone());
    let r = verify_palindromic_matrix(k, n, f)?;
    Ok(Instance {
        key: format!("k={k:?} N={n}"),
        pass: r.palindromic,
        sides: sides([
            ("M(t)", poly_json(&pr, &r.polynomial)),
            ("M(1-t)", poly_json(&pr, &r.reflected)),
        ]),
        notes: Vec::new(),
    })
}

type ShapeCheck<F> = fn(String, &Partition, usize, &F, &DiagonalWeightSequence) -> Result<Instance>;

fn shape_sweep<F: CoefficientMap>(
    identity: Identity,
    check: ShapeCheck<F>,
    config: &SweepConfig,
    f: &F,
) -> Result<SweepReport> {
    let mut report = SweepReport::new(identity, f.name());
    for shape in &config.shapes {
        let offsets = DiagonalWeightSequence::required_offsets(shape);
        let draws = config.diagonals.draws(&shape.to_string(), offsets);
        for &n in &config.n_values {
            for (suffix, a) in &draws {
                report.push(check(
                    format!("shape={shape} N={n}{suffix}"),
                    shape,
                    n,
                    f,
                    a,
                )?);
            }
        }
    }
    Ok(report)
}

pub fn sweep_jacobi_trudi<F: CoefficientMap>(config: &SweepConfig, f: &F) -> Result<SweepReport> {
    shape_sweep(Identity::JacobiTrudi, jacobi_trudi_instance, config, f)
}

pub fn sweep_conjugation<F: CoefficientMap>(config: &SweepConfig, f: &F) -> Result<SweepReport> {
    shape_sweep(Identity::Conjugation, conjugation_instance, config, f)
}

pub fn sweep_lgv<F: CoefficientMap>(config: &SweepConfig, f: &F) -> Result<SweepReport> {
    shape_sweep(Identity::Lgv, lgv_instance, config, f)
}

/// Every admissible `b` of every shape, for each `M` in `m_values`.
pub fn sweep_single_layer<F: CoefficientMap>(
    config: &SweepConfig,
    m_values: &[usize],
    f: &F,
) -> Result<SweepReport> {
    let mut report = SweepReport::new(Identity::SingleLayer, f.name());
    for shape in &config.shapes {
        let offsets = DiagonalWeightSequence::required_offsets(shape);
        let draws = config.diagonals.draws(&shape.to_string(), offsets);
        for b in BitTableau::admissible_b(shape) {
            for &m in m_values {
                for (suffix, a) in &draws {
                    let key = format!("shape={shape} b={b:?} M={m}{suffix}");
                    report.push(single_layer_instance(key, shape, &b, m, f, a)?);
                }
            }
        }
    }
    Ok(report)
}

/// Index lengths `0..=max_r` read off the diagonal from offset `start`
/// upward.
pub fn sweep_path_sums<F: CoefficientMap>(
    max_r: usize,
    n_values: &[usize],
    start: i64,
    diagonals: &Diagonals,
    f: &F,
) -> Result<SweepReport> {
    let mut report = SweepReport::new(Identity::PathSum, f.name());
    for r in 0..=max_r as i64 {
        let (i, j) = (start, start + r - 1);
        let draws = diagonals.draws(&format!("r={r}"), i..=j.max(i));
        for &n in n_values.iter().filter(|&&n| n >= 1) {
            for (suffix, a) in &draws {
                report.push(path_sum_instance(
                    format!("i={i} j={j} N={n}{suffix}"),
                    i,
                    j,
                    n,
                    f,
                    a,
                )?);
            }
        }
    }
    Ok(report)
}

/// Every key sequence of length `≤ max_r` with entries in `lo..=hi`.
pub fn sweep_oracles(max_r: usize, n_values: &[usize], lo: i64, hi: i64) -> Result<SweepReport> {
    let mut report = SweepReport::new(Identity::Oracles, RationalField.name());
    for r in 0..=max_r {
        let mut keys = vec![lo; r];
        loop {
            for &n in n_values {
                report.push(oracle_instance(&keys, n)?);
            }
            if !odometer(&mut keys, lo, hi) {
                break;
            }
        }
    }
    Ok(report)
}

/// Every `k ∈ alphabet^r` for `1 ≤ r ≤ max_r`.
pub fn sweep_palindrome<F: CoefficientMap>(
    max_r: usize,
    alphabet: &[i64],
    n_values: &[usize],
    f: &F,
) -> Result<SweepReport> {
    let mut report = SweepReport::new(Identity::Palindrome, f.name());
    if alphabet.is_empty() {
        return Ok(report);
    }
    for r in 1..=max_r {
        let mut idx = vec![0i64; r];
        loop {
            let k: Vec<i64> = idx.iter().map(|&i| alphabet[i as usize]).collect();
            for &n in n_values {
                report.push(palindrome_instance(&k, n, f)?);
            }
            if !odometer(&mut idx, 0, alphabet.len() as i64 - 1) {
                break;
            }
        }
    }
    Ok(report)
}

/// Advances `digits` to the next tuple in `lo..=hi`, last digit fastest.
fn odometer(digits: &mut [i64], lo: i64, hi: i64) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::QuasiSymmetricMap;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(Identity::from_name(id.name()), Some(id));
        }
        assert_eq!(Identity::from_name("nope"), None);
    }

    #[test]
    fn draws_are_reproducible_and_in_range() {
        let d = Diagonals::Random {
            seed: 7,
            count: 3,
            lo: -2,
            hi: 3,
        };
        let x = d.draws("(2,1)", -1..=1);
        assert_eq!(x, d.draws("(2,1)", -1..=1));
        assert_eq!(x.len(), 3);
        for (_, a) in &x {
            for d in -1..=1 {
                assert!((-2..=3).contains(&a.get(d).unwrap()));
            }
        }
        assert_ne!(
            x,
            Diagonals::Random {
                seed: 8,
                count: 3,
                lo: -2,
                hi: 3
            }
            .draws("(2,1)", -1..=1)
        );
    }

    #[test]
    fn odometer_counts_all_tuples() {
        let mut digits = vec![0; 3];
        let mut n = 1;
        while odometer(&mut digits, 0, 2) {
            n += 1;
        }
        assert_eq!(n, 27);
        assert_eq!(digits, vec![0, 0, 0]);
    }

    #[test]
    fn small_sweeps_pass() {
        let f = RationalMap::new();
        let config = SweepConfig::up_to(
            3,
            [1, 2, 3],
            Diagonals::Random {
                seed: 1,
                count: 2,
                lo: -2,
                hi: 3,
            },
        );
        for report in [
            sweep_jacobi_trudi(&config, &f).unwrap(),
            sweep_conjugation(&config, &f).unwrap(),
            sweep_lgv(&config, &f).unwrap(),
            sweep_single_layer(&config, &[1, 2], &f).unwrap(),
        ] {
            assert!(report.pass, "{}", report.summary());
            assert!(report.checked > 0);
        }
        let diagonals = Diagonals::Random {
            seed: 1,
            count: 1,
            lo: -1,
            hi: 3,
        };
        assert!(
            sweep_path_sums(2, &[1, 2, 3], -1, &diagonals, &f)
                .unwrap()
                .pass
        );
        assert!(sweep_oracles(2, &[1, 3], -1, 2).unwrap().pass);
        assert!(sweep_palindrome(2, &[2, 3], &[2, 3], &f).unwrap().pass);
    }

    #[test]
    fn report_serializes_in_order() {
        let config = SweepConfig::up_to(
            2,
            [3],
            Diagonals::Fixed(DiagonalWeightSequence::constant(-1, 1, 1)),
        );
        let report = sweep_jacobi_trudi(&config, &QuasiSymmetricMap::new()).unwrap();
        assert_eq!(report.checked, 4);
        let keys: Vec<_> = report.instances.iter().map(|i| i.key.as_str()).collect();
        assert_eq!(
            keys,
            [
                "shape=() N=3",
                "shape=(1) N=3",
                "shape=(2) N=3",
                "shape=(1,1) N=3"
            ]
        );
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains("\"ring\":\"qsym\""));
    }

    #[test]
    fn domain_errors_propagate() {
        let config = SweepConfig::up_to(
            1,
            [3],
            Diagonals::Fixed(DiagonalWeightSequence::constant(0, 0, 0)),
        );
        let err = sweep_jacobi_trudi(&config, &QuasiSymmetricMap::new()).unwrap_err();
        assert!(err.is_domain());
    }
}
