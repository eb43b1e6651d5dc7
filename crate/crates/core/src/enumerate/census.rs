//! Full counts for one ground-set size, with optional resumable checkpoints.
//!
//! The tree is cut into units: the rank-3 children of each rank-2 node, in
//! chunks of [`UNIT_SIZE`]. Each finished unit appends one JSON line with its
//! counts and the canonical forms it saw first, so an interrupted run picks
//! up after the last complete line.

use std::collections::{BTreeMap, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canonical::{canonical_from_parts, CanonicalForm};
use super::tree::{Accumulator, Node, Walker};
use super::EnumConfig;
use crate::error::{Error, Result};

const UNIT_SIZE: usize = 64;

/// Labeled counts by rank and exact independence level, plus every
/// isomorphism class seen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    n: usize,
    /// `by_level[r][k]`: labeled rank-`r` matroids whose level is exactly `k`.
    by_level: Vec<Vec<u64>>,
    forms: BTreeMap<CanonicalForm, usize>,
}

impl Census {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Labeled rank-`r` matroids with every `k`-set independent.
    pub fn labeled(&self, r: usize, k: usize) -> u64 {
        self.by_level.get(r).map_or(0, |row| row.iter().skip(k).sum())
    }

    /// Isomorphism classes of rank `r` with every `k`-set independent.
    pub fn nonisomorphic(&self, r: usize, k: usize) -> u64 {
        self.forms
            .iter()
            .filter(|(f, &level)| f.rank() == r && level >= k)
            .count() as u64
    }

    pub fn total_labeled(&self) -> u64 {
        self.by_level.iter().flatten().sum()
    }

    /// Canonical forms in sorted order, each with its independence level.
    pub fn forms(&self) -> impl Iterator<Item = (&CanonicalForm, usize)> {
        self.forms.iter().map(|(f, &k)| (f, k))
    }
}

#[derive(Default)]
struct CensusAcc {
    by_level: Vec<Vec<u64>>,
    new_forms: Vec<(CanonicalForm, usize)>,
}

impl CensusAcc {
    fn add(&mut self, r: usize, k: usize, count: u64) {
        if self.by_level.len() <= r {
            self.by_level.resize(r + 1, Vec::new());
        }
        let row = &mut self.by_level[r];
        if row.len() <= k {
            row.resize(k + 1, 0);
        }
        row[k] += count;
    }
}

impl Accumulator for CensusAcc {
    fn merge(&mut self, other: Self) {
        for (r, row) in other.by_level.into_iter().enumerate() {
            for (k, c) in row.into_iter().enumerate() {
                if c > 0 {
                    self.add(r, k, c);
                }
            }
        }
        self.new_forms.extend(other.new_forms);
    }
}

#[derive(Serialize, Deserialize)]
struct UnitRecord {
    n: usize,
    parent: usize,
    chunk: usize,
    /// `(rank, level, count)`.
    counts: Vec<(usize, usize, u64)>,
    /// `(rank, level, code)`.
    forms: Vec<(usize, usize, Vec<u32>)>,
}

struct Run<'a> {
    walker: Walker,
    forms: DashMap<CanonicalForm, usize>,
    config: &'a EnumConfig,
}

impl Run<'_> {
    fn visit(&self, node: &Node, acc: &mut CensusAcc) {
        let n = self.walker.n;
        let (r, k) = (node.rank(), node.k_level());
        acc.add(r, k, 1);
        let form = canonical_from_parts(n, r, &node.bases(n), &node.levels);
        if !self.forms.contains_key(&form) && self.forms.insert(form.clone(), k).is_none() {
            acc.new_forms.push((form, k));
        }
    }

    fn walk_unit(&self, nodes: &[Node]) -> Result<CensusAcc> {
        let visit = |node: &Node, acc: &mut CensusAcc| self.visit(node, acc);
        nodes
            .par_iter()
            .map(|c| self.walker.walk(c, &visit))
            .try_reduce(CensusAcc::default, |mut a, b| {
                a.merge(b);
                Ok(a)
            })
    }
}

fn load_checkpoint(path: &Path, n: usize) -> Result<HashMap<(usize, usize), UnitRecord>> {
    let mut done = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(e.into()),
    };
    for line in BufReader::new(file).lines() {
        let line = line?;
        // A torn final line from an interrupted write is simply redone.
        let Ok(record) = serde_json::from_str::<UnitRecord>(&line) else {
            continue;
        };
        if record.n != n {
            return Err(Error::InvalidArgument(format!(
                "checkpoint {} belongs to n = {}, not n = {n}",
                path.display(),
                record.n
            )));
        }
        done.insert((record.parent, record.chunk), record);
    }
    Ok(done)
}

fn run_census(n: usize, config: &EnumConfig) -> Result<Census> {
    let run = Run {
        walker: Walker::new(n, n, 0, config.node_budget),
        forms: DashMap::new(),
        config,
    };
    let done = match &config.checkpoint {
        Some(path) => load_checkpoint(path, n)?,
        None => HashMap::new(),
    };
    if !done.is_empty() {
        log::info!("resuming n = {n} with {} finished units", done.len());
    }
    let mut writer = match &run.config.checkpoint {
        Some(path) => Some(OpenOptions::new().create(true).append(true).open(path)?),
        None => None,
    };

    // Ranks 0 to 2 are cheap and always recomputed.
    let mut total = CensusAcc::default();
    let root = Node::root();
    run.walker.tick()?;
    run.visit(&root, &mut total);
    let mut frontier = Vec::new();
    for rank1 in root.children(n) {
        run.walker.tick()?;
        run.visit(&rank1, &mut total);
        for rank2 in rank1.children(n) {
            run.walker.tick()?;
            run.visit(&rank2, &mut total);
            frontier.push(rank2);
        }
    }

    for (parent, node) in frontier.iter().enumerate() {
        let children = node.children(n);
        for (chunk, unit) in children.chunks(UNIT_SIZE).enumerate() {
            if let Some(record) = done.get(&(parent, chunk)) {
                for &(r, k, c) in &record.counts {
                    total.add(r, k, c);
                }
                for (r, k, code) in &record.forms {
                    run.forms.insert(CanonicalForm::from_code(n, *r, code.clone()), *k);
                }
                continue;
            }
            let acc = run.walk_unit(unit)?;
            if let Some(w) = writer.as_mut() {
                let mut counts = Vec::new();
                for (r, row) in acc.by_level.iter().enumerate() {
                    for (k, &c) in row.iter().enumerate() {
                        if c > 0 {
                            counts.push((r, k, c));
                        }
                    }
                }
                let forms = acc
                    .new_forms
                    .iter()
                    .map(|(f, k)| (f.rank(), *k, f.code().to_vec()))
                    .collect();
                let record = UnitRecord {
                    n,
                    parent,
                    chunk,
                    counts,
                    forms,
                };
                let line = serde_json::to_string(&record).map_err(|e| Error::Internal(e.to_string()))?;
                writeln!(w, "{line}")?;
                w.flush()?;
            }
            total.merge(acc);
        }
    }
    log::debug!("n = {n}: {} nodes visited", run.walker.visited());

    Ok(Census {
        n,
        by_level: total.by_level,
        forms: run.forms.into_iter().collect(),
    })
}

/// Counts every matroid on `n` elements by rank, level and isomorphism class.
pub fn census(n: usize, config: &EnumConfig) -> Result<Census> {
    config.check_size(n, n)?;
    config.install(|| run_census(n, config))?
}
