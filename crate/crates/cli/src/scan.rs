use std::collections::{BTreeMap, BTreeSet};

use anyhow::Result;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;
use twobridge::{certify, BigContinuedFraction, BigFraction};

use crate::cache::Cache;
use crate::record::bound_of;

/// Which fractions to scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Range {
    /// Every `q/D` with odd `3 ≤ D ≤ max`, `0 < q < D`, `gcd(q, D) = 1`.
    Determinant(u64),
    /// Every odd-length expansion with at most `2m + 1` terms, each in `1..=max_term`.
    Expansions { max_m: usize, max_term: u64 },
}

pub fn fractions(range: Range) -> Vec<BigFraction> {
    match range {
        Range::Determinant(max) => {
            let mut out = Vec::new();
            for d in (3..=max).step_by(2) {
                for q in 1..d {
                    if gcd(q, d) == 1 {
                        out.push(BigFraction::new(q.into(), d.into()).expect("coprime pair"));
                    }
                }
            }
            out
        }
        Range::Expansions { max_m, max_term } => {
            let mut seen = BTreeSet::new();
            if max_term == 0 {
                return Vec::new();
            }
            for m in 0..=max_m {
                let len = 2 * m + 1;
                let mut terms = vec![1u64; len];
                loop {
                    let cf = BigContinuedFraction::new(terms.iter().map(|&t| BigInt::from(t)).collect())
                        .expect("positive terms");
                    if let Ok(f) = cf.value() {
                        if f.is_knot() {
                            seen.insert(f);
                        }
                    }
                    let mut i = 0;
                    while i < len && terms[i] == max_term {
                        terms[i] = 1;
                        i += 1;
                    }
                    if i == len {
                        break;
                    }
                    terms[i] += 1;
                }
            }
            seen.into_iter().collect()
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Certifies every fraction, consulting and extending the cache. Output is
/// in input order regardless of thread count.
pub fn certify_all(list: &[BigFraction], cache: &mut Cache) -> Result<Vec<Value>> {
    let results: Vec<(Value, bool)> = list
        .par_iter()
        .map(|f| match cache.get(&f.to_string()) {
            Some(v) => (v.clone(), false),
            None => (certify(f).to_json(), true),
        })
        .collect();
    let fresh: Vec<(String, Value)> = list
        .iter()
        .zip(&results)
        .filter(|(_, (_, new))| *new)
        .map(|(f, (v, _))| (f.to_string(), v.clone()))
        .collect();
    cache.append(&fresh)?;
    Ok(results.into_iter().map(|(v, _)| v).collect())
}

/// Keeps one row per knot type: the largest bound, then the smallest numerator.
/// Rows come back sorted by `(D, q)`.
pub fn dedupe(list: &[BigFraction], certs: Vec<Value>) -> Vec<Value> {
    let mut best: BTreeMap<BigFraction, (usize, Option<BigInt>)> = BTreeMap::new();
    for (i, (f, c)) in list.iter().zip(&certs).enumerate() {
        let n = bound_of(c);
        let key = f.class_key();
        match best.get(&key) {
            Some((j, m)) if !better(&n, f, m, &list[*j]) => {}
            _ => {
                best.insert(key, (i, n));
            }
        }
    }
    let mut keep: Vec<usize> = best.into_values().map(|(i, _)| i).collect();
    keep.sort_by(|&a, &b| list[a].cmp(&list[b]));
    let mut certs: Vec<Option<Value>> = certs.into_iter().map(Some).collect();
    keep.into_iter().filter_map(|i| certs[i].take()).collect()
}

fn better(n: &Option<BigInt>, f: &BigFraction, m: &Option<BigInt>, g: &BigFraction) -> bool {
    match n.cmp(m) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => f < g,
    }
}
