//! Sperner numbers and weak/strong Lefschetz checks.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artinian::{ArtinianAlgebra, HilbertSeries, LinearForm};
use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, Matrix, Scalar};

/// A finite graded vector space with an action of linear forms that raises
/// degree by one.
pub trait GradedModule {
    fn nvars(&self) -> usize;

    /// Lowest degree of the support.
    fn offset(&self) -> usize;

    /// Dimensions of the graded pieces starting at `offset`.
    fn graded_dims(&self) -> Vec<usize>;

    /// `maps[k]` is the action of `g` from degree `offset + k` to
    /// `offset + k + 1`; one map per entry of `graded_dims`.
    fn action_maps(&self, g: &LinearForm) -> Vec<Matrix>;

    fn describe_element(&self, degree: usize, coords: &[Scalar]) -> String {
        let _ = degree;
        format!(
            "[{}]",
            coords
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
    }

    fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.offset(), self.graded_dims())
    }
}

impl GradedModule for ArtinianAlgebra {
    fn nvars(&self) -> usize {
        ArtinianAlgebra::nvars(self)
    }

    fn offset(&self) -> usize {
        0
    }

    fn graded_dims(&self) -> Vec<usize> {
        self.dims()
    }

    fn action_maps(&self, g: &LinearForm) -> Vec<Matrix> {
        self.linear_maps(g)
    }

    fn describe_element(&self, degree: usize, coords: &[Scalar]) -> String {
        self.lift(degree, coords).to_string_in(self.vars())
    }
}

/// Sperner data of a Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzStats {
    pub sperner: usize,
    pub cosperner: usize,
    /// `SP_1, …, SP_c`; absent unless the Hilbert function is unimodal and
    /// symmetric.
    pub sperner_vector: Option<Vec<usize>>,
    pub unimodal: bool,
    pub symmetric: bool,
}

pub fn stats(h: &HilbertSeries) -> LefschetzStats {
    let d = h.coeffs();
    let sperner = h.max_coeff();
    let cosperner = d.windows(2).map(|w| w[0].min(w[1])).sum();
    let unimodal = h.is_unimodal();
    let symmetric = h.is_symmetric();
    let sperner_vector = (unimodal && symmetric).then(|| {
        let c = d.len().saturating_sub(1);
        (1..=c).map(|k| sperner_number(d, k)).collect()
    });
    LefschetzStats {
        sperner,
        cosperner,
        sperner_vector,
        unimodal,
        symmetric,
    }
}

/// `SP_k = Σ_i max(d_i − d_{i−k}, 0)`.
fn sperner_number(d: &[usize], k: usize) -> usize {
    d.iter()
        .enumerate()
        .map(|(i, &di)| {
            let prev = if i >= k { d[i - k] } else { 0 };
            di.saturating_sub(prev)
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Property {
    Wlp,
    Slp,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Wlp => "WLP",
            Property::Slp => "SLP",
        })
    }
}

/// Proof that no linear form can be a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    AsymmetricHilbert {
        degree: usize,
        dim: usize,
        mirror_degree: usize,
        mirror_dim: usize,
    },
    /// An element of degree `degree` killed by every variable, where the
    /// property forces injectivity of a map out of that degree.
    SocleObstruction {
        degree: usize,
        target_degree: usize,
        element: String,
        coordinates: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Witness { form: LinearForm },
    DefinitelyNo { certificate: Certificate },
    NoWitnessFound { trials: usize, candidates: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Requirement {
    Injective,
    Surjective,
    Bijective,
}

/// One map checked for a candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub source_degree: usize,
    pub target_degree: usize,
    pub power: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub required: Requirement,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub property: Property,
    #[serde(flatten)]
    pub status: Status,
    /// Checks for the witness, or for the last candidate tried.
    pub report: Vec<DegreeCheck>,
    /// Prime used to screen candidates by modular rank, if any.
    pub modular_screen: Option<u64>,
}

impl LefschetzVerdict {
    pub fn witness(&self) -> Option<&LinearForm> {
        match &self.status {
            Status::Witness { form } => Some(form),
            _ => None,
        }
    }

    pub fn is_witness(&self) -> bool {
        self.witness().is_some()
    }

    pub fn is_definitely_no(&self) -> bool {
        matches!(self.status, Status::DefinitelyNo { .. })
    }
}

/// Parameters of the randomized witness search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchParams {
    pub trials: usize,
    pub seed: u64,
    pub coeff_bound: u64,
    pub modulus: Option<u64>,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            trials: 8,
            seed: 0,
            coeff_bound: 1000,
            modulus: None,
        }
    }
}

/// Candidates in search order: each variable, the all-ones form, then
/// `trials` seeded forms with coefficients in `[1, coeff_bound]`.
pub fn candidates(nvars: usize, params: &SearchParams) -> Vec<LinearForm> {
    let mut out: Vec<LinearForm> = (0..nvars).map(|i| LinearForm::variable(nvars, i)).collect();
    out.push(LinearForm::all_ones(nvars));
    out.extend(random_forms(nvars, params));
    out
}

/// The seeded random part of the candidate list.
pub fn random_forms(nvars: usize, params: &SearchParams) -> Vec<LinearForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let bound = params.coeff_bound.max(1);
    (0..params.trials)
        .map(|_| {
            LinearForm::new(
                (0..nvars)
                    .map(|_| Scalar::from_integer(rng.gen_range(1..=bound).into()))
                    .collect(),
            )
        })
        .collect()
}

/// `×g^k` from position `from` (relative to the offset).
fn power_from(maps: &[Matrix], dims: &[usize], from: usize, k: usize) -> Matrix {
    let mut acc = Matrix::identity(dims[from]);
    for step in 0..k {
        let src = from + step;
        if src + 1 >= dims.len() {
            return Matrix::zeros(0, dims[from]);
        }
        acc = maps[src].mul(&acc);
    }
    acc
}

fn requirement(source: usize, target: usize) -> Requirement {
    match source.cmp(&target) {
        std::cmp::Ordering::Less => Requirement::Injective,
        std::cmp::Ordering::Greater => Requirement::Surjective,
        std::cmp::Ordering::Equal => Requirement::Bijective,
    }
}

/// Maps required by the property, as `(from, k)` pairs relative to the
/// offset.
fn required_maps(property: Property, len: usize) -> Vec<(usize, usize)> {
    match property {
        Property::Wlp => (0..len.saturating_sub(1)).map(|i| (i, 1)).collect(),
        Property::Slp => {
            let top = len - 1;
            (0..=top / 2).map(|i| (i, top - 2 * i)).collect()
        }
    }
}

fn full_rank_needed(property: Property, source: usize, target: usize) -> usize {
    match property {
        Property::Wlp => source.min(target),
        Property::Slp => source,
    }
}

fn check_map(
    property: Property,
    offset: usize,
    from: usize,
    k: usize,
    dims: &[usize],
    m: &Matrix,
) -> DegreeCheck {
    let (source_dim, target_dim) = (dims[from], dims.get(from + k).copied().unwrap_or(0));
    let rank = m.rank();
    let holds = match property {
        Property::Wlp => rank == source_dim.min(target_dim),
        Property::Slp => source_dim == target_dim && rank == source_dim,
    };
    DegreeCheck {
        source_degree: offset + from,
        target_degree: offset + from + k,
        power: k,
        source_dim,
        target_dim,
        rank,
        required: match property {
            Property::Wlp => requirement(source_dim, target_dim),
            Property::Slp => Requirement::Bijective,
        },
        holds,
    }
}

/// Modular screen: `Some(false)` when some required map visibly lacks full
/// rank mod `p`, `Some(true)` when all have it, `None` when inconclusive.
fn modular_screen(property: Property, maps: &[Matrix], dims: &[usize], p: u64) -> Option<bool> {
    for (from, k) in required_maps(property, dims.len()) {
        let m = power_from(maps, dims, from, k);
        let target = dims.get(from + k).copied().unwrap_or(0);
        if property == Property::Slp && dims[from] != target {
            return Some(false);
        }
        let r = rank_mod_p(&m, p).ok()?;
        if r < full_rank_needed(property, dims[from], target) {
            return Some(false);
        }
    }
    Some(true)
}

/// Exact definition-level evaluation of one candidate.
fn evaluate<M: GradedModule + ?Sized>(
    m: &M,
    property: Property,
    maps: &[Matrix],
) -> (bool, Vec<DegreeCheck>) {
    let dims = m.graded_dims();
    if dims.is_empty() {
        return (true, Vec::new());
    }
    let offset = m.offset();
    let report: Vec<DegreeCheck> = required_maps(property, dims.len())
        .into_iter()
        .map(|(from, k)| {
            check_map(
                property,
                offset,
                from,
                k,
                &dims,
                &power_from(maps, &dims, from, k),
            )
        })
        .collect();
    (report.iter().all(|c| c.holds), report)
}

/// Lemma-level cross-checks: `dim M/gM ≥ Sperner`, WLP ⇔ `rank(×g) =
/// CoSperner`, and when the Sperner vector exists, SLP ⇔ `rank(×g^k) =
/// dim − SP_k` for all `k`.
fn cross_check<M: GradedModule + ?Sized>(m: &M, property: Property, maps: &[Matrix], holds: bool) {
    let dims = m.graded_dims();
    let st = stats(&m.hilbert_series());
    let total: usize = dims.iter().sum();
    let rank1: usize = (0..dims.len())
        .map(|i| power_from(maps, &dims, i, 1).rank())
        .sum();
    assert!(
        total - rank1 >= st.sperner,
        "dim M/gM below the Sperner number"
    );
    match property {
        Property::Wlp => assert_eq!(
            holds,
            rank1 == st.cosperner,
            "WLP disagrees with the CoSperner criterion"
        ),
        Property::Slp => {
            if let Some(sp) = &st.sperner_vector {
                let by_ranks = sp.iter().enumerate().all(|(idx, &spk)| {
                    let k = idx + 1;
                    let r: usize = (0..dims.len())
                        .map(|i| power_from(maps, &dims, i, k).rank())
                        .sum();
                    r == total - spk
                });
                assert_eq!(
                    holds, by_ranks,
                    "SLP disagrees with the Sperner-vector criterion"
                );
            }
        }
    }
}

/// Structural reason why no linear form can witness the property.
pub fn certificate<M: GradedModule + ?Sized>(m: &M, property: Property) -> Option<Certificate> {
    let dims = m.graded_dims();
    let len = dims.len();
    if len == 0 {
        return None;
    }
    let offset = m.offset();
    if property == Property::Slp {
        for i in 0..len / 2 {
            if dims[i] != dims[len - 1 - i] {
                return Some(Certificate::AsymmetricHilbert {
                    degree: offset + i,
                    dim: dims[i],
                    mirror_degree: offset + len - 1 - i,
                    mirror_dim: dims[len - 1 - i],
                });
            }
        }
    }
    let forced: Vec<(usize, usize)> = match property {
        Property::Wlp => (0..len - 1)
            .filter(|&i| dims[i] <= dims[i + 1])
            .map(|i| (i, i + 1))
            .collect(),
        Property::Slp => (0..len)
            .filter(|&i| 2 * i < len - 1)
            .map(|i| (i, len - 1 - i))
            .collect(),
    };
    if forced.is_empty() {
        return None;
    }
    let n = m.nvars();
    let var_maps: Vec<Vec<Matrix>> = (0..n)
        .map(|j| m.action_maps(&LinearForm::variable(n, j)))
        .collect();
    for (i, target) in forced {
        if dims[i] == 0 {
            continue;
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for vm in &var_maps {
            for r in 0..vm[i].rows() {
                rows.push(vm[i].row(r).to_vec());
            }
        }
        let kernel = if rows.is_empty() {
            Matrix::zeros(0, dims[i]).kernel_basis()
        } else {
            Matrix::from_rows(rows).kernel_basis()
        };
        if let Some(v) = kernel.into_iter().next() {
            return Some(Certificate::SocleObstruction {
                degree: offset + i,
                target_degree: offset + target,
                element: m.describe_element(offset + i, &v),
                coordinates: v.iter().map(ToString::to_string).collect(),
            });
        }
    }
    None
}

fn single_check<M: GradedModule + ?Sized>(
    m: &M,
    property: Property,
    g: &LinearForm,
) -> LefschetzVerdict {
    let maps = m.action_maps(g);
    let (holds, report) = evaluate(m, property, &maps);
    cross_check(m, property, &maps, holds);
    let status = if holds {
        Status::Witness { form: g.clone() }
    } else if let Some(certificate) = certificate(m, property) {
        Status::DefinitelyNo { certificate }
    } else {
        Status::NoWitnessFound {
            trials: 1,
            candidates: 1,
        }
    };
    LefschetzVerdict {
        property,
        status,
        report,
        modular_screen: None,
    }
}

/// Definition-level WLP check of `g`: each `×g: M_i → M_{i+1}` is injective
/// or surjective.
pub fn check_wlp<M: GradedModule + ?Sized>(m: &M, g: &LinearForm) -> LefschetzVerdict {
    single_check(m, Property::Wlp, g)
}

/// Definition-level SLP check of `g`: each `×g^{b−a−2i}: M_{a+i} → M_{b−i}`
/// is bijective.
pub fn check_slp<M: GradedModule + ?Sized>(m: &M, g: &LinearForm) -> LefschetzVerdict {
    single_check(m, Property::Slp, g)
}

pub fn check<M: GradedModule + ?Sized>(
    m: &M,
    property: Property,
    g: &LinearForm,
) -> LefschetzVerdict {
    single_check(m, property, g)
}

/// Tries the candidate list in order and returns the first witness.
pub fn find_witness<M: GradedModule + ?Sized>(
    m: &M,
    property: Property,
    params: &SearchParams,
) -> LefschetzVerdict {
    if let Some(certificate) = certificate(m, property) {
        let maps = m.action_maps(&LinearForm::all_ones(m.nvars()));
        let (_, report) = evaluate(m, property, &maps);
        return LefschetzVerdict {
            property,
            status: Status::DefinitelyNo { certificate },
            report,
            modular_screen: params.modulus,
        };
    }
    let dims = m.graded_dims();
    let list = candidates(m.nvars(), params);
    let total = list.len();
    let mut last_report = Vec::new();
    for g in list {
        let maps = m.action_maps(&g);
        if let Some(p) = params.modulus {
            if modular_screen(property, &maps, &dims, p) == Some(false) {
                continue;
            }
        }
        let (holds, report) = evaluate(m, property, &maps);
        if holds {
            cross_check(m, property, &maps, true);
            return LefschetzVerdict {
                property,
                status: Status::Witness { form: g },
                report,
                modular_screen: params.modulus,
            };
        }
        last_report = report;
    }
    LefschetzVerdict {
        property,
        status: Status::NoWitnessFound {
            trials: params.trials,
            candidates: total,
        },
        report: last_report,
        modular_screen: params.modulus,
    }
}

/// Outcome of the truncated-tensor criterion for one `α`.
#[derive(Clone, Debug, Serialize)]
pub struct TensorEntry {
    pub alpha: u32,
    pub hilbert: Vec<usize>,
    pub wlp: LefschetzVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorReport {
    pub slp: LefschetzVerdict,
    pub entries: Vec<TensorEntry>,
    pub all_wlp_witnessed: bool,
    /// False only when an SLP witness coexists with a proven WLP failure.
    pub consistent: bool,
}

/// `A` has the SLP iff every `A[u]/(u^α)` has the WLP; searched for
/// `α = 1..=alpha_max`.
pub fn verify_tensor_criterion(
    a: &ArtinianAlgebra,
    alpha_max: u32,
    params: &SearchParams,
) -> Result<TensorReport> {
    if !a.hilbert().is_symmetric() {
        return Err(Error::NonSymmetricHilbert);
    }
    let slp = find_witness(a, Property::Slp, params);
    let mut entries = Vec::new();
    for alpha in 1..=alpha_max {
        let t = a.tensor_truncated(alpha)?;
        let wlp = find_witness(&t, Property::Wlp, params);
        entries.push(TensorEntry {
            alpha,
            hilbert: t.dims(),
            wlp,
        });
    }
    let all_wlp_witnessed = entries.iter().all(|e| e.wlp.is_witness());
    let any_wlp_refuted = entries.iter().any(|e| e.wlp.is_definitely_no());
    let consistent = !(slp.is_witness() && any_wlp_refuted);
    Ok(TensorReport {
        slp,
        entries,
        all_wlp_witnessed,
        consistent,
    })
}

/// `dim M/gM` from the degree-one action.
pub fn quotient_dim<M: GradedModule + ?Sized>(m: &M, g: &LinearForm) -> usize {
    let dims = m.graded_dims();
    let maps = m.action_maps(g);
    let rank: usize = maps.iter().map(Matrix::rank).sum();
    dims.iter().sum::<usize>() - rank
}

#[cfg(test)]
mod tests;
