//! Brute-force verification of the closed-form maxima and of the extremal
//! class predicates, one `(family, n, p)` cell at a time.

use std::collections::BTreeSet;
use std::time::Instant;

use chemtree::bounds::{self, feasible, max_value};
use chemtree::enumerate::{enumerate_filtered, DEFAULT_ORDER_CAP};
use chemtree::witness::{build_witness, class_membership};
use chemtree::{BoundsError, CanonicalCode, ChemicalTree, ClassQuery, EnumError, EnumFilter, Family, Index};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cache::{Cache, CacheError};
use crate::report::{CodeNote, ConfigEcho, Finding, Report};

/// How the brute-force maximizers compare with the formula and the class predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    /// Formula equals the brute-force maximum and maximizers equal class members.
    Exact,
    /// The formula is off but the maximizer set equals the class.
    FormulaOnlyMismatch,
    /// The formula is right but the maximizer set differs from the class.
    ClassOnlyMismatch,
    BothMismatch,
}

impl Agreement {
    fn new(formula_ok: bool, sets_equal: bool) -> Self {
        match (formula_ok, sets_equal) {
            (true, true) => Agreement::Exact,
            (false, true) => Agreement::FormulaOnlyMismatch,
            (true, false) => Agreement::ClassOnlyMismatch,
            (false, false) => Agreement::BothMismatch,
        }
    }
}

pub(crate) fn display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    #[serde(serialize_with = "display")]
    pub family: Family,
    pub n: usize,
    pub p: usize,
    #[serde(serialize_with = "display")]
    pub index: Index,
    pub regime: String,
    pub formula_value: u64,
    pub brute_max: Option<u64>,
    pub n_trees: usize,
    pub n_maximizers: usize,
    pub n_class_members: usize,
    pub maximizer_class_agreement: Agreement,
    pub witness_ok: bool,
    pub pass: bool,
    pub elapsed_ms: f64,
}

impl VerificationRecord {
    fn key(&self) -> (Family, usize, usize, Index) {
        (self.family, self.n, self.p, self.index)
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid order range {n_min}..={n_max} (need 1 <= n_min <= n_max <= {cap})")]
    Range { n_min: usize, n_max: usize, cap: usize },
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub families: Vec<Family>,
    pub n_min: usize,
    pub n_max: usize,
    pub indices: Vec<Index>,
    /// Worker threads; 0 picks the number of CPUs.
    pub jobs: usize,
    pub cache: Option<Cache>,
}

impl VerifyConfig {
    pub fn new(families: &[Family], n_min: usize, n_max: usize, indices: &[Index]) -> Self {
        VerifyConfig { families: families.to_vec(), n_min, n_max, indices: indices.to_vec(), jobs: 0, cache: None }
    }
}

/// Runs one family over `n_min..=n_max` without a cache.
pub fn verify_family(family: Family, n_min: usize, n_max: usize, indices: &[Index]) -> Result<Report, HarnessError> {
    verify(&VerifyConfig::new(&[family], n_min, n_max, indices))
}

fn filter_for(family: Family, p: usize) -> EnumFilter {
    match family {
        Family::Segments => EnumFilter::Segments(p),
        Family::Branching => EnumFilter::Branching(p),
    }
}

fn parameter(t: &ChemicalTree, family: Family) -> usize {
    match family {
        Family::Segments => t.segment_count(),
        Family::Branching => t.branching_count(),
    }
}

fn index_value(t: &ChemicalTree, index: Index) -> u64 {
    match index {
        Index::M1 => t.zagreb_m1(),
        Index::M2 => t.zagreb_m2(),
    }
}

/// Every feasible cell of the configuration, in report order.
pub fn cells(config: &VerifyConfig) -> Vec<(Family, usize, usize)> {
    let mut families = config.families.clone();
    families.sort();
    families.dedup();
    families
        .into_iter()
        .flat_map(|f| {
            (config.n_min..=config.n_max)
                .flat_map(move |n| (0..=n).filter(move |&p| feasible(f, n, p)).map(move |p| (f, n, p)))
        })
        .collect()
}

pub fn verify(config: &VerifyConfig) -> Result<Report, HarnessError> {
    if config.n_min < 1 || config.n_min > config.n_max || config.n_max > DEFAULT_ORDER_CAP {
        return Err(HarnessError::Range { n_min: config.n_min, n_max: config.n_max, cap: DEFAULT_ORDER_CAP });
    }
    let mut indices = config.indices.clone();
    indices.sort();
    indices.dedup();
    let cells = cells(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let results: Vec<(Vec<VerificationRecord>, Vec<Finding>)> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(family, n, p)| verify_cell(family, n, p, &indices, config.cache.as_ref()))
            .collect::<Result<_, _>>()
    })?;
    let mut records = Vec::new();
    let mut findings = Vec::new();
    for (r, f) in results {
        records.extend(r);
        findings.extend(f);
    }
    records.sort_by_key(VerificationRecord::key);
    let config = ConfigEcho {
        families: config.families.iter().map(ToString::to_string).collect(),
        n_min: config.n_min,
        n_max: config.n_max,
        indices: indices.iter().map(ToString::to_string).collect(),
        jobs: config.jobs,
        cache: config.cache.is_some(),
    };
    Ok(Report::new(records, config, findings))
}

/// The class's trees, through the cache when there is one.
fn class_trees(n: usize, filter: EnumFilter, cache: Option<&Cache>) -> Result<Vec<ChemicalTree>, HarnessError> {
    if let Some(cache) = cache {
        match cache.load(n, filter) {
            Ok(Some(codes)) => {
                if let Some(trees) = codes.iter().map(CanonicalCode::to_tree).collect::<Option<Vec<_>>>() {
                    return Ok(trees);
                }
                eprintln!("warning: undecodable code in {}; re-enumerating", cache.path(n, filter).display());
            }
            Ok(None) => {}
            Err(e @ CacheError::Corrupt { .. }) => eprintln!("warning: {e}; re-enumerating"),
            Err(e) => return Err(e.into()),
        }
    }
    let trees: Vec<ChemicalTree> = enumerate_filtered(n, filter)?.collect();
    if let Some(cache) = cache {
        let codes: Vec<CanonicalCode> = trees.iter().map(ChemicalTree::canonical_code).collect();
        cache.store(n, filter, &codes)?;
    }
    Ok(trees)
}

fn note(t: &ChemicalTree, family: Family, n: usize, p: usize, index: Index) -> CodeNote {
    CodeNote {
        code: t.canonical_code().to_hex(),
        value: index_value(t, index),
        failed_conditions: class_membership(t, family, n, p, index)
            .failed_conditions
            .iter()
            .map(|c| c.label().to_owned())
            .collect(),
    }
}

fn verify_cell(
    family: Family,
    n: usize,
    p: usize,
    indices: &[Index],
    cache: Option<&Cache>,
) -> Result<(Vec<VerificationRecord>, Vec<Finding>), HarnessError> {
    let start = Instant::now();
    let trees = class_trees(n, filter_for(family, p), cache)?;
    let witness = build_witness(family, n, p)?;
    let mut records = Vec::new();
    let mut findings = Vec::new();
    for &index in indices {
        let bound = max_value(&ClassQuery::new(family, n, p, index))?;
        let values: Vec<u64> = trees.iter().map(|t| index_value(t, index)).collect();
        let brute_max = values.iter().copied().max();
        let maximizers: BTreeSet<usize> = (0..trees.len()).filter(|&i| Some(values[i]) == brute_max).collect();
        let members: BTreeSet<usize> =
            (0..trees.len()).filter(|&i| class_membership(&trees[i], family, n, p, index).member).collect();
        let formula_ok = brute_max == Some(bound.value);
        let agreement = Agreement::new(formula_ok, maximizers == members);
        if maximizers != members {
            findings.push(Finding::ClassMismatch {
                family,
                n,
                p,
                index,
                maximizers_outside_class: maximizers
                    .difference(&members)
                    .map(|&i| note(&trees[i], family, n, p, index))
                    .collect(),
                members_below_max: members
                    .difference(&maximizers)
                    .map(|&i| note(&trees[i], family, n, p, index))
                    .collect(),
            });
        }
        let witness_verdict = class_membership(&witness, family, n, p, index);
        let witness_ok = witness.order() == n
            && parameter(&witness, family) == p
            && index_value(&witness, index) == bound.value
            && witness_verdict.member;
        if !witness_ok {
            findings.push(Finding::Witness {
                family,
                n,
                p,
                index,
                value: index_value(&witness, index),
                failed_conditions: witness_verdict.failed_conditions.iter().map(|c| c.label().to_owned()).collect(),
            });
        }
        if family == Family::Segments && index == Index::M2 && p >= 3 {
            if let Some(stated) = bounds::stated_segments_m2(n, p).filter(|&s| s != bound.value) {
                findings.push(Finding::StatedFormula { family, n, p, index, stated, verified: bound.value, brute_max });
            }
        }
        records.push(VerificationRecord {
            family,
            n,
            p,
            index,
            regime: bound.regime.label().to_owned(),
            formula_value: bound.value,
            brute_max,
            n_trees: trees.len(),
            n_maximizers: maximizers.len(),
            n_class_members: members.len(),
            maximizer_class_agreement: agreement,
            witness_ok,
            pass: formula_ok && witness_ok,
            elapsed_ms: 0.0,
        });
    }
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    for r in &mut records {
        r.elapsed_ms = elapsed;
    }
    Ok((records, findings))
}
