//! Jordan types of `×z` and central simple modules.

mod subquotient;
mod verify;

pub use subquotient::{GradedSubquotient, GradedSubspace, TensorSum};
pub use verify::{
    verify_cor48, verify_prop46, verify_prop66, verify_theorem2, Cor48Report, ModuleCheck,
    Prop46Report, Prop66Report, Theorem2Report,
};

use serde::Serialize;

use crate::artinian::{compose_powers, ArtinianAlgebra, HilbertSeries, LinearForm};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpan};

/// Jordan type of a nilpotent map as `(size, multiplicity)` pairs with
/// strictly decreasing sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanProfile {
    pub blocks: Vec<(usize, usize)>,
    /// `r_k = rank(×z^k)` for `k = 0, 1, …` down to the first zero.
    pub rank_sequence: Vec<usize>,
}

impl JordanProfile {
    /// Reads the block structure off a rank sequence ending in zero.
    pub fn from_ranks(ranks: Vec<usize>) -> Self {
        let at = |k: usize| ranks.get(k).copied().unwrap_or(0);
        let mut blocks = Vec::new();
        for k in (1..ranks.len()).rev() {
            let count = (at(k - 1) + at(k + 1)) as isize - 2 * at(k) as isize;
            assert!(count >= 0, "rank sequence is not convex");
            if count > 0 {
                blocks.push((k, count as usize));
            }
        }
        JordanProfile {
            blocks,
            rank_sequence: ranks,
        }
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Total number of blocks, `dim A/(z)`.
    pub fn block_count(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    /// Largest block size, the nilpotency index of `z`.
    pub fn nilpotency_index(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.0)
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|(f, m)| f * m).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.0).collect()
    }
}

/// Per-degree maps of `×z^k` for `k = 0, 1, …` until they all vanish.
fn power_families(a: &ArtinianAlgebra, z: &LinearForm) -> Vec<Vec<Matrix>> {
    let maps = a.linear_maps(z);
    let dims = a.dims();
    let mut out = vec![compose_powers(&maps, &dims, 0)];
    loop {
        let prev = out.last().unwrap();
        let next: Vec<Matrix> = (0..dims.len())
            .map(|d| {
                let k = out.len();
                let src = d + k - 1;
                if src >= dims.len() || prev[d].rows() == 0 {
                    Matrix::zeros(a.dim_in(d + k), dims[d])
                } else {
                    maps[src].mul(&prev[d])
                }
            })
            .collect();
        let done = next.iter().all(Matrix::is_zero);
        out.push(next);
        if done {
            return out;
        }
    }
}

pub fn jordan_profile(a: &ArtinianAlgebra, z: &LinearForm) -> Result<JordanProfile> {
    if z.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    let ranks: Vec<usize> = power_families(a, z)
        .iter()
        .map(|fam| fam.iter().map(Matrix::rank).sum())
        .collect();
    let profile = JordanProfile::from_ranks(ranks);
    assert_eq!(profile.dim(), a.dim(), "block sizes do not sum to dim A");
    assert_eq!(profile.block_count(), a.dim() - profile.rank_sequence[1]);
    for w in profile.rank_sequence.windows(3) {
        assert!(w[0] - w[1] >= w[1] - w[2], "rank drops must not increase");
    }
    Ok(profile)
}

/// One central simple module with its block size and multiplicity.
#[derive(Clone, Debug)]
pub struct CentralSimpleModule {
    pub size: usize,
    pub multiplicity: usize,
    pub module: GradedSubquotient,
    pub hilbert: HilbertSeries,
    pub tilde_hilbert: HilbertSeries,
}

#[derive(Clone, Debug)]
pub struct CsmDecomposition {
    pub z: LinearForm,
    pub profile: JordanProfile,
    pub modules: Vec<CentralSimpleModule>,
}

impl CsmDecomposition {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn tilde_sum(&self) -> HilbertSeries {
        self.modules
            .iter()
            .fold(HilbertSeries::default(), |acc, m| acc.add(&m.tilde_hilbert))
    }
}

/// `U_i = ((0:z^{f_i}) + (z)) / ((0:z^{f_{i+1}}) + (z))` for the distinct
/// block sizes `f_1 > … > f_s` and `f_{s+1} = 0`.
pub fn csm_decompose(a: &ArtinianAlgebra, z: &LinearForm) -> Result<CsmDecomposition> {
    let profile = jordan_profile(a, z)?;
    let powers = power_families(a, z);
    let top = a.socle_degree();
    let maps = a.linear_maps(z);

    let image: Vec<RowSpan> = (0..=top)
        .map(|d| {
            let mut span = RowSpan::new(a.dim_in(d));
            if d > 0 {
                for v in maps[d - 1].column_space_basis() {
                    span.insert(&v);
                }
            }
            span
        })
        .collect();
    let chain_term = |k: usize| -> GradedSubspace {
        let pieces = (0..=top)
            .map(|d| {
                let mut span = image[d].clone();
                if k > 0 {
                    for v in powers[k.min(powers.len() - 1)][d].kernel_basis() {
                        span.insert(&v);
                    }
                }
                span
            })
            .collect();
        GradedSubspace::new(pieces)
    };

    let sizes = profile.sizes();
    let mut modules = Vec::new();
    for (i, &(f, mult)) in profile.blocks.iter().enumerate() {
        let next = sizes.get(i + 1).copied().unwrap_or(0);
        let module = GradedSubquotient::new(a, &chain_term(f), &chain_term(next));
        let hilbert = module.hilbert().clone();
        assert_eq!(
            hilbert.total(),
            mult,
            "dim U_i differs from the block multiplicity"
        );
        let tilde_hilbert = hilbert.mul(&HilbertSeries::truncated(f));
        modules.push(CentralSimpleModule {
            size: f,
            multiplicity: mult,
            module,
            hilbert,
            tilde_hilbert,
        });
    }
    Ok(CsmDecomposition {
        z: z.clone(),
        profile,
        modules,
    })
}
