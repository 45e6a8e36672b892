//! Graded Betti numbers of monomial ideals from simplicial homology.
//!
//! For a multidegree `a`, the upper Koszul simplicial complex `K^a(I)` has as
//! faces the squarefree sets `σ` with `x^a / x^σ ∈ I`, and
//! `β_{i,a}(I) = dim H̃_{i-1}(K^a(I))`. Summing over multidegrees dividing
//! `lcm(G(I))` gives the graded table and hence `reg(I)` with no reference to
//! Borel-type theory. Homology is taken over the rationals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::integer_rank;
use crate::ring::{divisors, Monomial};

/// Default cap on the number of multidegrees visited by [`betti_table`].
pub const DEFAULT_BETTI_BUDGET: u64 = 200_000;

/// A finite simplicial complex on vertices `0..vertex_count`, stored as its
/// full face set. Faces are sorted vertex lists; the empty face is `[]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// The void complex (no faces, not even the empty one).
    pub fn void(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            faces: BTreeSet::new(),
        }
    }

    /// Builds a complex from an explicit face list, which must be closed
    /// under taking subsets.
    pub fn from_faces(
        vertex_count: usize,
        faces: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if f.iter().any(|&v| v >= vertex_count) {
                return Err(Error::Internal(format!("face {f:?} uses a missing vertex")));
            }
            set.insert(f);
        }
        for f in &set {
            for k in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(k);
                if !set.contains(&sub) {
                    return Err(Error::Internal(format!(
                        "face set not closed: {f:?} present but {sub:?} missing"
                    )));
                }
            }
        }
        Ok(Self {
            vertex_count,
            faces: set,
        })
    }

    /// The downward closure of `maximal`.
    pub fn from_maximal_faces(vertex_count: usize, maximal: &[Vec<usize>]) -> Result<Self> {
        let mut faces = BTreeSet::new();
        for f in maximal {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for mask in 0u64..(1 << f.len()) {
                faces.insert(
                    f.iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect::<Vec<_>>(),
                );
            }
        }
        Self::from_faces(vertex_count, faces)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face dimension; `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }

    fn faces_by_size(&self) -> Vec<Vec<&Vec<usize>>> {
        let top = self.faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for f in &self.faces {
            by_size[f.len()].push(f);
        }
        by_size
    }
}

/// Reduced rational homology dimensions `dim H̃_d` for `d = -1..=dim`, listed
/// from `d = -1`. Empty for the void complex.
pub fn reduced_homology_dims(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    if complex.is_void() {
        return Ok(Vec::new());
    }
    let by_size = complex.faces_by_size();
    // ranks[s] = rank of the boundary from faces of size s to size s-1
    let mut ranks = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        let lower: BTreeMap<&Vec<usize>, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(k, f)| (*f, k))
            .collect();
        let mut matrix = vec![vec![0i64; by_size[s].len()]; lower.len()];
        for (col, face) in by_size[s].iter().enumerate() {
            for k in 0..face.len() {
                let mut sub = (*face).clone();
                sub.remove(k);
                let row = lower[&sub];
                matrix[row][col] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        ranks[s] = integer_rank(matrix)?;
    }
    Ok((0..by_size.len())
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect())
}

/// The upper Koszul simplicial complex of `I` at multidegree `a`.
pub fn koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    ideal.ctx().check(a)?;
    let n = a.len();
    let support: Vec<usize> = (0..n).filter(|&k| a.exponents()[k] > 0).collect();
    let mut faces = Vec::new();
    for mask in 0u64..(1 << support.len()) {
        let sigma: Vec<usize> = support
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let mut exps = a.exponents().to_vec();
        for &v in &sigma {
            exps[v] -= 1;
        }
        if ideal.contains(&Monomial::new(exps)?) {
            faces.push(sigma);
        }
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Graded Betti numbers `β_{i,j}(I)` over a field of characteristic 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    characteristic: u32,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    j: u32,
    value: u64,
}

#[derive(Serialize)]
struct BettiJson {
    characteristic: u32,
    entries: Vec<BettiEntry>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        BettiJson {
            characteristic: self.characteristic,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &value)| BettiEntry { i, j, value })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max{j - i : β_{ij} ≠ 0}`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// Conventional grid: columns are homological degrees `i`, rows are
    /// `j - i`, zeros shown as `.`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let Some(reg) = self.regularity() else {
            return "(zero table)\n".into();
        };
        let low = self
            .entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .min()
            .unwrap_or(reg);
        let cols = self.projective_dimension() + 1;
        let cell = |v: u64| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), (0..cols).map(|i| i.to_string()).collect()));
        rows.push((
            "total:".into(),
            (0..cols)
                .map(|i| {
                    let total: u64 = self
                        .entries
                        .iter()
                        .filter(|((k, _), _)| *k == i)
                        .map(|(_, v)| v)
                        .sum();
                    total.to_string()
                })
                .collect(),
        ));
        for r in low..=reg {
            rows.push((
                format!("{r}:"),
                (0..cols)
                    .map(|i| {
                        let j = r + i as i64;
                        if j < 0 {
                            ".".into()
                        } else {
                            cell(self.get(i, j as u32))
                        }
                    })
                    .collect(),
            ));
        }
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..cols)
            .map(|c| {
                rows.iter()
                    .map(|(_, cells)| cells[c].len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for (label, cells) in rows {
            let _ = write!(out, "{label:>label_w$}");
            for (c, text) in cells.iter().enumerate() {
                let _ = write!(out, " {text:>w$}", w = col_w[c]);
            }
            out.push('\n');
        }
        out
    }
}

/// Number of multidegrees `betti_table` would visit for `I`.
pub fn multidegree_count(ideal: &MonomialIdeal) -> u128 {
    ideal
        .gens_lcm()
        .exponents()
        .iter()
        .map(|&e| e as u128 + 1)
        .product()
}

/// All graded Betti numbers of `I`, refusing inputs whose multidegree count
/// exceeds `budget`.
pub fn betti_table(ideal: &MonomialIdeal, budget: u64) -> Result<BettiTable> {
    ideal.ensure_proper_nonzero()?;
    let required = multidegree_count(ideal);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded {
            required,
            cap: budget,
        });
    }
    let candidates: Vec<Monomial> = divisors(&ideal.gens_lcm())
        .into_iter()
        .filter(|a| ideal.contains(a))
        .collect();
    let contributions = candidates
        .par_iter()
        .map(|a| {
            let dims = reduced_homology_dims(&koszul_complex(ideal, a)?)?;
            Ok(dims
                .into_iter()
                .enumerate()
                .filter(|&(_, d)| d > 0)
                .map(|(i, d)| ((i, a.degree()), d as u64))
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut entries = BTreeMap::new();
    for ((i, j), d) in contributions.into_iter().flatten() {
        *entries.entry((i, j)).or_insert(0) += d;
    }
    Ok(BettiTable {
        entries,
        characteristic: 0,
    })
}

/// `reg(I) = max{j - i : β_{ij}(I) ≠ 0}` from the Betti table.
pub fn regularity_oracle(ideal: &MonomialIdeal, budget: u64) -> Result<u32> {
    let reg = betti_table(ideal, budget)?
        .regularity()
        .ok_or_else(|| Error::Internal("empty Betti table for a nonzero ideal".into()))?;
    u32::try_from(reg).map_err(|_| Error::Internal(format!("negative regularity {reg}")))
}
