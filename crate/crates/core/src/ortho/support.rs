use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::SparseMatrix;
use crate::rep::Irrep;
use crate::subgroups::{all_projections, RootSubset, SubgroupLabel};

/// Which blocks `A_{στ} = p_σ A p_τ` of an operator are nonzero with respect
/// to the `K_S`-isotypic decomposition of one irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSupport {
    pub subgroup: RootSubset,
    pub labels: Vec<SubgroupLabel>,
    /// Nonzero `(σ, τ)` pairs, in label order.
    pub pairs: Vec<(SubgroupLabel, SubgroupLabel)>,
    pub max_row_blocks: usize,
    pub max_col_blocks: usize,
}

impl BlockSupport {
    pub fn to_json(&self) -> Value {
        json!({
            "S": self.subgroup.to_vec(),
            "labels": self.labels,
            "support": self.pairs.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "max_row_blocks": self.max_row_blocks,
            "max_col_blocks": self.max_col_blocks,
        })
    }
}

pub fn block_support(rep: &Irrep, a: &SparseMatrix, s: &RootSubset, exec: Exec) -> Result<BlockSupport> {
    if a.n_rows() != rep.dim() || a.n_cols() != rep.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator on a representation of dimension {}",
            a.n_rows(),
            a.n_cols(),
            rep.dim()
        )));
    }
    let ps = all_projections(rep, s, exec)?;
    let a_pt: Vec<SparseMatrix> = exec.map(&ps, |p| a.mul(&p.matrix).expect("square")).into_iter().collect();
    let idx: Vec<(usize, usize)> = (0..ps.len()).flat_map(|i| (0..ps.len()).map(move |j| (i, j))).collect();
    let nonzero = exec.map(&idx, |&(i, j)| !ps[i].matrix.mul(&a_pt[j]).expect("square").is_zero());
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cols: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs = Vec::new();
    for (&(i, j), nz) in idx.iter().zip(nonzero) {
        if nz {
            *rows.entry(i).or_default() += 1;
            *cols.entry(j).or_default() += 1;
            pairs.push((ps[i].label.clone(), ps[j].label.clone()));
        }
    }
    Ok(BlockSupport {
        subgroup: s.clone(),
        labels: ps.into_iter().map(|p| p.label).collect(),
        pairs,
        max_row_blocks: rows.values().copied().max().unwrap_or(0),
        max_col_blocks: cols.values().copied().max().unwrap_or(0),
    })
}
