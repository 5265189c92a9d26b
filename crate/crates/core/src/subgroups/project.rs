use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;
use serde_json::{json, Value};

use super::label::SubgroupLabel;
use super::roots::{blocks_of, BlockStructure, RootSubset};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gt::WeightVector;
use crate::linalg::{gram_projection_sparse, kernel_basis, EchelonBasis, Rational, SparseMatrix, SparseVector};
use crate::rep::Irrep;

/// Orthogonal (w.r.t. the Gram form) projection onto the `σ`-isotypic
/// component of `π_λ|_{K_S}`.
#[derive(Debug, Clone)]
pub struct IsotypicProjection {
    pub subgroup: RootSubset,
    pub label: SubgroupLabel,
    /// `mult(σ) · dim(σ)`.
    pub rank: usize,
    pub matrix: SparseMatrix,
}

impl IsotypicProjection {
    pub fn to_json(&self, rep: &Irrep) -> Value {
        json!({
            "lambda": rep.hw().entries(),
            "S": self.subgroup.to_vec(),
            "sigma": self.label,
            "matrix": self.matrix.to_json(),
        })
    }
}

/// Stacks the given operators, restricted to the columns `cols`, into one
/// matrix whose kernel is the joint kernel on `span{ξ_c : c ∈ cols}`.
/// Operators are passed transposed so columns can be read as rows.
fn stacked_restriction(transposed: &[&SparseMatrix], cols: &[usize]) -> SparseMatrix {
    let mut row_ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut triplets = Vec::new();
    for (o, t) in transposed.iter().enumerate() {
        for (local, &c) in cols.iter().enumerate() {
            for (r, v) in t.row(c) {
                let next = row_ids.len();
                let id = *row_ids.entry((o, *r)).or_insert(next);
                triplets.push((id, local, v.clone()));
            }
        }
    }
    SparseMatrix::from_triplets(row_ids.len(), cols.len(), triplets).expect("indices in range")
}

/// Within-block simple raising generators `E_{k,k+1}`, `α_k ∈ S`, transposed.
fn simple_raisers_t<'a>(rep: &'a Irrep, s: &RootSubset) -> Vec<&'a SparseMatrix> {
    s.members().map(|k| rep.generators().e_transposed(k, k + 1)).collect()
}

/// Joint kernel of `ops` (given transposed) on the weight space `w`, as
/// sparse vectors in global coordinates.
fn joint_kernel(rep: &Irrep, ops_t: &[&SparseMatrix], w: &WeightVector) -> Vec<SparseVector> {
    let cols = rep.weight_space(w);
    if cols.is_empty() {
        return Vec::new();
    }
    kernel_basis(&stacked_restriction(ops_t, cols))
        .into_iter()
        .map(|v| {
            v.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (cols[j], x))
                .collect()
        })
        .collect()
}

fn is_block_dominant(blocks: &BlockStructure, w: &WeightVector) -> bool {
    blocks.split(&w.0).iter().all(|b| b.windows(2).all(|p| p[0] >= p[1]))
}

/// `K_S`-types of `π_λ` with multiplicities, in decreasing label order.
/// The multiplicity of `σ` is the dimension of the space of `K_S`-highest
/// weight vectors of weight `σ`.
pub fn restrict_types(rep: &Irrep, s: &RootSubset) -> Vec<(SubgroupLabel, usize)> {
    let blocks = blocks_of(s);
    let raisers = simple_raisers_t(rep, s);
    let mut out: Vec<(SubgroupLabel, usize)> = rep
        .weight_spaces()
        .iter()
        .filter(|(w, _)| is_block_dominant(&blocks, w))
        .filter_map(|(w, cols)| {
            let mult = cols.len() - crate::linalg::rank(&stacked_restriction(&raisers, cols));
            (mult > 0).then(|| (SubgroupLabel::from_weight(&blocks, w).expect("block dominant"), mult))
        })
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Smallest `K_S`-invariant subspace containing `seeds`, organised by weight
/// space: the span of all within-block lowering words applied to the seeds.
fn saturate(rep: &Irrep, s: &RootSubset, seeds: Vec<SparseVector>) -> BTreeMap<WeightVector, EchelonBasis> {
    let lowerers: Vec<&SparseMatrix> = s.members().map(|k| rep.e(k + 1, k)).collect();
    let mut spaces: BTreeMap<WeightVector, EchelonBasis> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for v in seeds {
        let Some(&i) = v.keys().next() else { continue };
        if spaces.entry(rep.weight(i).clone()).or_default().insert(&v) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for f in &lowerers {
            let u = f.mul_sparse_vec(&v);
            let Some(&i) = u.keys().next() else { continue };
            if spaces.entry(rep.weight(i).clone()).or_default().insert(&u) {
                queue.push_back(u);
            }
        }
    }
    spaces
}

fn check_label(s: &RootSubset, sigma: &SubgroupLabel, rep: &Irrep) -> Result<BlockStructure> {
    if s.n() != rep.n() {
        return Err(Error::DimensionMismatch(format!("subgroup of SU({}) on a rep of SU({})", s.n(), rep.n())));
    }
    let blocks = blocks_of(s);
    if !sigma.fits(&blocks) {
        return Err(Error::InvalidArgument(format!("label {sigma} does not match blocks {blocks}")));
    }
    Ok(blocks)
}

/// Exact isotypic projection `p_σ`; zero when `σ` does not occur.
///
/// Highest-weight vectors of weight `σ` are found as a joint kernel, their
/// `K_S`-span is grown with lowering generators, and the resulting subspace
/// (certified to have dimension `mult · dim σ`) is projected onto weight space
/// by weight space.
pub fn isotypic_projection(rep: &Irrep, s: &RootSubset, sigma: &SubgroupLabel) -> Result<IsotypicProjection> {
    check_label(s, sigma, rep)?;
    let zero = |rank| IsotypicProjection {
        subgroup: s.clone(),
        label: sigma.clone(),
        rank,
        matrix: SparseMatrix::zeros(rep.dim(), rep.dim()),
    };
    let Some(w) = sigma.weight_in(rep.hw()) else {
        return Ok(zero(0));
    };
    let hw_vectors = joint_kernel(rep, &simple_raisers_t(rep, s), &w);
    if hw_vectors.is_empty() {
        return Ok(zero(0));
    }
    let mult = hw_vectors.len();
    let spaces = saturate(rep, s, hw_vectors);
    let rank: usize = spaces.values().map(EchelonBasis::len).sum();
    let expected = mult * sigma.dim() as usize;
    if rank != expected {
        return Err(Error::Inconsistent(format!(
            "isotypic component of {sigma} has dimension {rank}, expected {mult}·{} = {expected}",
            sigma.dim()
        )));
    }
    let mut triplets = Vec::new();
    for basis in spaces.values() {
        let vectors: Vec<SparseVector> = basis.vectors().cloned().collect();
        let p = gram_projection_sparse(&vectors, rep.gram())?;
        triplets.extend(p.entries().map(|(r, c, v)| (r, c, v.clone())));
    }
    Ok(IsotypicProjection {
        subgroup: s.clone(),
        label: sigma.clone(),
        rank,
        matrix: SparseMatrix::from_triplets(rep.dim(), rep.dim(), triplets)?,
    })
}

/// `p_σ` for every `σ` occurring in `π_λ|_{K_S}`, in `restrict_types` order.
pub fn all_projections(rep: &Irrep, s: &RootSubset, exec: Exec) -> Result<Vec<IsotypicProjection>> {
    let labels: Vec<SubgroupLabel> = restrict_types(rep, s).into_iter().map(|(l, _)| l).collect();
    exec.map(&labels, |l| isotypic_projection(rep, s, l)).into_iter().collect()
}

/// `P_F = Σ_{σ ∈ F} p_σ`.
pub fn projection_sum(rep: &Irrep, s: &RootSubset, labels: &[SubgroupLabel]) -> Result<SparseMatrix> {
    labels.iter().try_fold(SparseMatrix::zeros(rep.dim(), rep.dim()), |acc, l| {
        acc.add(&isotypic_projection(rep, s, l)?.matrix)
    })
}

/// Basis of the `K_S`-fixed vectors: the zero weight space (all weight
/// entries equal) intersected with the kernels of every within-block
/// `E_{p,q}`, `p ≠ q`.
pub fn fixed_vectors(rep: &Irrep, s: &RootSubset) -> Vec<Vec<Rational>> {
    let n = rep.n() as i64;
    if rep.hw().sum() % n != 0 {
        return Vec::new();
    }
    let w = WeightVector(vec![rep.hw().sum() / n; rep.n()]);
    let ops: Vec<&SparseMatrix> = blocks_of(s)
        .off_diagonal_pairs()
        .into_iter()
        .map(|(p, q)| rep.generators().e_transposed(p, q))
        .collect();
    joint_kernel(rep, &ops, &w)
        .into_iter()
        .map(|v| {
            let mut dense = vec![Rational::zero(); rep.dim()];
            for (i, x) in v {
                dense[i] = x;
            }
            dense
        })
        .collect()
}

/// The `K_S` Lie algebra generators: within-block `E_{p,q}` (`p ≠ q`) and the
/// full diagonal.
pub fn subgroup_generators<'a>(rep: &'a Irrep, s: &RootSubset) -> Vec<&'a SparseMatrix> {
    let mut ops: Vec<&SparseMatrix> = blocks_of(s).off_diagonal_pairs().into_iter().map(|(p, q)| rep.e(p, q)).collect();
    ops.extend((1..=rep.n()).map(|k| rep.e(k, k)));
    ops
}
