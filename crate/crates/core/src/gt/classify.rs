//! The fourth quantum number `k`: along each `T`, vectors of the lowest slice
//! get `k = 0`, `PfF_{hat 2}` raises `k` by one while `N < 0`, and vectors
//! not reached from below start again at `k = 0`. Slices with `N > 0` are
//! labeled by transport from `-N`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::model::{model_chain, rank_table, GammaConvention, RankTable};
use super::{check_highest, t_values, CaseTag, GtError, RectangleGeometry};
use crate::arith::{apply_word, is_zero_vector, unit_vector, EchelonBasis, ExactMatrix, QuadScalar, Rational, SparseMatrix, Vector};
use crate::repr::{multiplicity_slices, omega_operator, pf_slice_maps, Irrep, MultiplicitySlice, Representation};
use crate::uea::{IndexSet, Uea};

/// Slice dimensions along one `T` with the `PfF_{hat 2}` maps between
/// neighbours (`maps[i]` goes from `ns[i]` to `ns[i+1]`).
#[derive(Debug, Clone)]
pub struct Chain {
    pub t: Rational,
    pub ns: Vec<Rational>,
    pub dims: Vec<usize>,
    pub maps: Vec<ExactMatrix>,
}

impl Chain {
    /// Prefix of the chain with `N <= 0`.
    pub fn lower(&self) -> Chain {
        let len = self.ns.iter().take_while(|n| !n.is_positive()).count();
        Chain {
            t: self.t.clone(),
            ns: self.ns[..len].to_vec(),
            dims: self.dims[..len].to_vec(),
            maps: self.maps[..len.saturating_sub(1)].to_vec(),
        }
    }
}

/// Basis of one slice (in slice coordinates) with a `k` per vector.
#[derive(Debug, Clone)]
pub struct GradedSlice {
    pub n: Rational,
    pub vectors: Vec<Vector>,
    pub k: Vec<u32>,
}

impl GradedSlice {
    fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Largest `m` with `v` in `F_m = span{vectors with k >= m}`; `None` for `v = 0`.
    fn level(&self, v: &[QuadScalar]) -> Option<u32> {
        let c = EchelonBasis::from_vectors(v.len(), &self.vectors).coordinates(v).expect("basis of the slice");
        c.iter().zip(&self.k).filter(|(x, _)| !x.is_zero()).map(|(_, k)| *k).min()
    }

    /// Basis of `F_m`.
    fn filtration(&self, m: u32) -> Vec<Vector> {
        self.vectors.iter().zip(&self.k).filter(|(_, k)| **k >= m).map(|(v, _)| v.clone()).collect()
    }

    pub fn k_multiset(&self) -> Vec<u32> {
        let mut k = self.k.clone();
        k.sort_unstable();
        k
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub from_n: Rational,
    pub to_n: Rational,
    pub rank: usize,
    pub nullity: usize,
    /// Vectors of the target slice starting at `k = 0`.
    pub fresh: usize,
    /// The killed vectors are exactly the fresh `k = 0` vectors of the source.
    pub kernel_is_fresh: bool,
    /// `(rank, nullity)` predicted from the rectangle.
    pub predicted: Option<(usize, usize)>,
}

fn span_rank(dim: usize, vs: &[Vector]) -> usize {
    EchelonBasis::from_vectors(dim, vs).len()
}

/// Runs the labeling along a chain. Fails when a vector with `k > 0` is
/// killed or when the nonzero images are dependent.
pub fn assign_k(chain: &Chain) -> Result<(Vec<GradedSlice>, Vec<StepRecord>), GtError> {
    let mut slices: Vec<GradedSlice> = Vec::with_capacity(chain.ns.len());
    let mut steps = Vec::new();
    for i in 0..chain.ns.len() {
        let d = chain.dims[i];
        let (mut vectors, mut k) = (Vec::new(), Vec::new());
        if i > 0 {
            let prev = &slices[i - 1];
            let m = &chain.maps[i - 1];
            let mut killed = Vec::new();
            for (v, kv) in prev.vectors.iter().zip(&prev.k) {
                let img = m.mul_vec(v).expect("chain shapes");
                if is_zero_vector(&img) {
                    killed.push(*kv);
                } else {
                    vectors.push(img);
                    k.push(kv + 1);
                }
            }
            let rank = m.rank();
            let nullity = prev.dim() - rank;
            let n = &chain.ns[i - 1];
            if span_rank(d, &vectors) != vectors.len() || vectors.len() != rank {
                return Err(GtError::Filtration {
                    n: n.clone(),
                    detail: format!("images of the labeled basis are dependent (rank {}, {} nonzero images)", rank, vectors.len()),
                });
            }
            let kernel_is_fresh = killed.iter().all(|&x| x == 0);
            if !kernel_is_fresh {
                return Err(GtError::Filtration {
                    n: n.clone(),
                    detail: format!("a vector with k > 0 is killed (killed labels {:?})", killed),
                });
            }
            steps.push(StepRecord {
                from_n: n.clone(),
                to_n: chain.ns[i].clone(),
                rank,
                nullity,
                fresh: d - rank,
                kernel_is_fresh,
                predicted: None,
            });
        }
        // fresh complement: kernel of the next map first, then unit vectors
        let mut span = EchelonBasis::from_vectors(d, &vectors);
        let mut candidates: Vec<Vector> = Vec::new();
        if let Some(next) = chain.maps.get(i) {
            candidates.extend(next.kernel());
        }
        candidates.extend((0..d).map(|c| unit_vector(d, c)));
        for c in candidates {
            if span.len() == d {
                break;
            }
            if span.insert(&c) {
                vectors.push(c);
                k.push(0);
            }
        }
        slices.push(GradedSlice { n: chain.ns[i].clone(), vectors, k });
    }
    Ok((slices, steps))
}

/// Realized chain of one `T` on an irrep.
fn realized_chain(
    g: &RectangleGeometry,
    slices: &[MultiplicitySlice],
    pf: &SparseMatrix,
) -> Result<(Chain, BTreeMap<Rational, usize>), GtError> {
    let ns = g.n_values();
    let at: BTreeMap<Rational, usize> =
        slices.iter().enumerate().filter(|(_, s)| s.t == g.t).map(|(i, s)| (s.n.clone(), i)).collect();
    let dims: Vec<usize> = ns.iter().map(|n| at.get(n).map_or(0, |&i| slices[i].dim())).collect();
    let own: Vec<MultiplicitySlice> = at.values().map(|&i| slices[i].clone()).collect();
    let found = pf_slice_maps(&own, pf, 2)?;
    let maps = (0..ns.len().saturating_sub(1))
        .map(|i| {
            found
                .iter()
                .find(|m| m.source_n == ns[i])
                .map(|m| m.matrix.clone())
                .unwrap_or_else(|| ExactMatrix::zeros(dims[i + 1], dims[i]))
        })
        .collect();
    Ok((Chain { t: g.t.clone(), ns, dims, maps }, at))
}

/// Outcome of comparing one rank table against the model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConventionOutcome {
    pub convention: GammaConvention,
    /// `None` when the model matrix is singular.
    pub matches: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TValidation {
    #[serde(rename = "T")]
    pub t: Rational,
    /// Slice dimensions agree with the number of second-row points per line.
    pub slice_dims_match: bool,
    pub steps: Vec<StepRecord>,
    /// Steps with `N + 1 <= 0` succeed and have the predicted rank.
    pub raising_below: bool,
    /// `PfF_{hat -2}` from `N` to `N - 1 >= 0` moves filtration level `k` to exactly `k + 1`.
    pub raising_above: bool,
    /// The transport at `N = 0` preserves every `F_m`; `None` without an `N = 0` slice.
    pub n0_agreement: Option<bool>,
    /// The transport at `N = 0` is a scalar matrix.
    pub w0_scalar: Option<bool>,
    /// Half-integer crossing `-1/2 → 1/2`: `(k, level of the image)` per vector.
    pub crossing: Option<Vec<(u32, Option<u32>)>>,
    pub cases: Vec<(Rational, CaseTag)>,
    pub rank_table: RankTable,
    pub conventions: Vec<ConventionOutcome>,
    /// `k` multiset per `N`.
    pub labels: Vec<SliceLabels>,
    pub error: Option<String>,
}

impl TValidation {
    pub fn crossing_consistent(&self) -> bool {
        self.crossing.as_ref().is_none_or(|c| c.iter().all(|(k, lvl)| *lvl == Some(k + 1)))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepValidation {
    pub weight: [Rational; 2],
    pub dim: usize,
    pub per_t: Vec<TValidation>,
    /// Each slice has pairwise distinct `k`, and the labels count every state once.
    pub labels_distinct: bool,
    pub labels_complete: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationChecks {
    pub labels_distinct: bool,
    pub labels_complete: bool,
    pub raising_below: bool,
    pub raising_above: bool,
    pub n0_agreement: bool,
    pub slice_dims_match: bool,
}

impl IrrepValidation {
    pub fn checks(&self) -> ClassificationChecks {
        ClassificationChecks {
            labels_distinct: self.labels_distinct,
            labels_complete: self.labels_complete,
            raising_below: self.per_t.iter().all(|t| t.raising_below),
            raising_above: self.per_t.iter().all(|t| t.raising_above),
            n0_agreement: self.per_t.iter().all(|t| t.n0_agreement != Some(false)),
            slice_dims_match: self.per_t.iter().all(|t| t.slice_dims_match),
        }
    }
}

struct Operators {
    pf_up: SparseMatrix,
    pf_down: SparseMatrix,
    omega: SparseMatrix,
    e: SparseMatrix,
}

/// `W = e^{2|T|} Ω`: slice `(T, -N)` to slice `(T, N)`, in slice coordinates.
fn transport(ops: &Operators, t: &Rational, from: &MultiplicitySlice, to: &MultiplicitySlice, v: &[QuadScalar]) -> Result<Vector, GtError> {
    let m = (-t.clone() * Rational::from_int(2)).to_i64().expect("integral 2|T|") as usize;
    let word: Vec<&SparseMatrix> = std::iter::repeat_n(&ops.e, m).chain(std::iter::once(&ops.omega)).collect();
    let image = apply_word(&word, &from.vector(v));
    to.coordinates(&image).ok_or_else(|| GtError::Filtration {
        n: to.n.clone(),
        detail: format!("transport from N = {} leaves the slice", from.n),
    })
}

fn validate_t(irrep: &Irrep, slices: &[MultiplicitySlice], ops: &Operators, t: &Rational) -> Result<TValidation, GtError> {
    let (l1, l2) = irrep.highest_pair();
    let g = RectangleGeometry::new(&l1, &l2, t)?;
    let (chain, at) = realized_chain(&g, slices, &ops.pf_up)?;
    let slice_dims_match = chain.ns.iter().zip(&chain.dims).all(|(n, d)| g.slice_dim(n) == *d);
    let table = rank_table(&chain);
    let conventions = GammaConvention::ALL
        .iter()
        .map(|&c| match model_chain(&g, c) {
            Ok(m) => ConventionOutcome { convention: c, matches: Some(rank_table(&m) == table), note: None },
            Err(e) => ConventionOutcome { convention: c, matches: None, note: Some(e.to_string()) },
        })
        .collect();
    let cases = chain
        .ns
        .iter()
        .filter(|n| g.slice_dim(n) > 0)
        .map(|n| g.case_of(n).map(|c| (n.clone(), c)))
        .collect::<Result<_, _>>()?;
    let mut out = TValidation {
        t: t.clone(),
        slice_dims_match,
        steps: Vec::new(),
        raising_below: false,
        raising_above: false,
        n0_agreement: None,
        w0_scalar: None,
        crossing: None,
        cases,
        rank_table: table,
        conventions,
        labels: Vec::new(),
        error: None,
    };
    if !slice_dims_match {
        out.error = Some("slice dimensions differ from the rectangle".into());
        return Ok(out);
    }
    let lower = chain.lower();
    let (graded, mut steps) = match assign_k(&lower) {
        Ok(x) => x,
        Err(e) => {
            out.error = Some(e.to_string());
            return Ok(out);
        }
    };
    for s in steps.iter_mut() {
        s.predicted = g.predicted_step(&s.from_n);
    }
    out.raising_below = steps.iter().all(|s| s.predicted == Some((s.rank, s.nullity)));
    out.steps = steps;

    // labels for N > 0 by transport
    let mut labeled: BTreeMap<Rational, GradedSlice> = graded.into_iter().map(|s| (s.n.clone(), s)).collect();
    for n in chain.ns.iter().filter(|n| n.is_positive()) {
        let mirror = -n.clone();
        let (Some(&to), Some(src)) = (at.get(n), labeled.get(&mirror)) else {
            continue;
        };
        let from = &slices[at[&mirror]];
        let vectors = src.vectors.iter().map(|v| transport(ops, t, from, &slices[to], v)).collect::<Result<Vec<_>, _>>()?;
        let k = src.k.clone();
        labeled.insert(n.clone(), GradedSlice { n: n.clone(), vectors, k });
    }

    // N = 0: the transport must preserve the filtration
    let zero = Rational::zero();
    if let (Some(&i0), Some(s0)) = (at.get(&zero), labeled.get(&zero)) {
        let sl = &slices[i0];
        let w: Vec<Vector> = (0..sl.dim()).map(|c| transport(ops, t, sl, sl, &unit_vector(sl.dim(), c))).collect::<Result<_, _>>()?;
        let wm = ExactMatrix::from_columns(sl.dim(), &w).expect("square");
        let top = s0.k.iter().copied().max().unwrap_or(0);
        let agree = (0..=top).all(|m| {
            let f = s0.filtration(m);
            let mut both = EchelonBasis::from_vectors(sl.dim(), &f);
            f.iter().all(|v| !both.insert(&wm.mul_vec(v).expect("square")))
        });
        out.n0_agreement = Some(agree);
        let c = wm.get(0, 0).clone();
        out.w0_scalar = Some(wm == ExactMatrix::identity(sl.dim()).scale(&c));
    }

    // PfF_{hat -2} from N to N - 1 >= 0
    let mut above = true;
    for n in chain.ns.iter().filter(|n| n.is_positive()) {
        let target = n - &Rational::one();
        if target.is_negative() {
            continue;
        }
        let (Some(src), Some(tgt), Some(&si), Some(&ti)) = (labeled.get(n), labeled.get(&target), at.get(n), at.get(&target))
        else {
            continue;
        };
        let (ss, ts) = (&slices[si], &slices[ti]);
        for (v, k) in src.vectors.iter().zip(&src.k) {
            let img = ops.pf_down.mul_vec(&ss.vector(v));
            let Some(c) = ts.coordinates(&img) else {
                above = false;
                continue;
            };
            match tgt.level(&c) {
                None => above &= *k == 0,
                Some(l) => above &= l == k + 1,
            }
        }
        let images: Vec<Vector> = src.vectors.iter().map(|v| ops.pf_down.mul_vec(&ss.vector(v))).collect();
        let nonzero: Vec<Vector> = images.into_iter().filter(|v| !is_zero_vector(v)).collect();
        above &= span_rank(irrep.dim(), &nonzero) == nonzero.len();
        if let Some(p) = g.predicted_step(&-n.clone()) {
            above &= p.0 == nonzero.len();
        }
    }
    out.raising_above = above;

    // half-integer crossing
    let (mh, ph) = (-Rational::half(), Rational::half());
    if let (Some(src), Some(tgt), Some(&si), Some(&ti)) = (labeled.get(&mh), labeled.get(&ph), at.get(&mh), at.get(&ph)) {
        let (ss, ts) = (&slices[si], &slices[ti]);
        let rows = src
            .vectors
            .iter()
            .zip(&src.k)
            .map(|(v, k)| {
                let img = ops.pf_up.mul_vec(&ss.vector(v));
                (*k, ts.coordinates(&img).and_then(|c| tgt.level(&c)))
            })
            .collect();
        out.crossing = Some(rows);
    }
    out.labels = labeled.values().map(|s| (s.n.clone(), s.k_multiset())).collect();
    Ok(out)
}

/// Runs every `T` of an irrep through the labeling and its checks.
pub fn validate_irrep(irrep: &Irrep, uea: &Uea) -> Result<IrrepValidation, GtError> {
    let (l1, l2) = irrep.highest_pair();
    let slices = multiplicity_slices(irrep)?;
    let alg = uea.algebra();
    let pf = |r: i32| irrep.rep.evaluate(&uea.pfaffian(&IndexSet::hat(alg, r).expect("o_5 index")));
    let omega = omega_operator(irrep, uea)?;
    let ops = Operators { pf_up: pf(2), pf_down: pf(-2), omega: omega.matrix, e: irrep.rep.matrix(-1, 0) };
    let per_t = t_values(&l1, &l2)?
        .iter()
        .map(|t| validate_t(irrep, &slices, &ops, t))
        .collect::<Result<Vec<_>, _>>()?;
    let labels_distinct = per_t.iter().all(|v| {
        v.error.is_none()
            && v.labels.iter().all(|(_, ks)| ks.windows(2).all(|w| w[0] != w[1]))
    });
    let counted: usize = per_t
        .iter()
        .map(|v| {
            let mult = (-v.t.clone() * Rational::from_int(2)).to_i64().expect("integral") as usize + 1;
            v.labels.iter().map(|(_, ks)| ks.len()).sum::<usize>() * mult
        })
        .sum();
    Ok(IrrepValidation {
        weight: [l1, l2],
        dim: irrep.dim(),
        labels_complete: counted == irrep.dim(),
        labels_distinct,
        per_t,
    })
}

/// `N` with the `k` of each basis vector of that slice.
pub type SliceLabels = (Rational, Vec<u32>);

/// Labels `(N, k multiset)` from the model alone: plain γ coefficients
/// below `N = 0`, mirrored above.
pub fn label_chain(g: &RectangleGeometry) -> Result<Vec<SliceLabels>, GtError> {
    let chain = model_chain(g, GammaConvention::Plain)?;
    let (graded, _) = assign_k(&chain.lower())?;
    let mut out: BTreeMap<Rational, Vec<u32>> = graded.iter().map(|s| (s.n.clone(), s.k_multiset())).collect();
    for n in chain.ns.iter().filter(|n| n.is_positive()) {
        if let Some(ks) = out.get(&-n.clone()).cloned() {
            out.insert(n.clone(), ks);
        }
    }
    Ok(out.into_iter().filter(|(_, ks)| !ks.is_empty()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRow {
    #[serde(rename = "T")]
    pub t: Rational,
    pub tau0: Rational,
    #[serde(rename = "N")]
    pub n: Rational,
    pub k: u32,
    pub case: String,
    pub sigma: u8,
    pub slice_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub weight: [Rational; 2],
    pub states: Vec<StateRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifiedIrrep {
    pub table: ClassificationTable,
    /// Representation the labels were computed on, or `"model"`.
    pub origin: String,
    pub validation: Option<IrrepValidation>,
}

fn table_from_labels(l1: &Rational, l2: &Rational, per_t: &[(Rational, Vec<SliceLabels>)]) -> Result<ClassificationTable, GtError> {
    let mut states = Vec::new();
    for (t, labels) in per_t {
        let g = RectangleGeometry::new(l1, l2, t)?;
        for (n, ks) in labels {
            if ks.is_empty() {
                continue;
            }
            let tag = g.case_of(n)?;
            for &k in ks {
                let mut tau0 = t.clone();
                while tau0 <= -t.clone() {
                    states.push(StateRow {
                        t: t.clone(),
                        tau0: tau0.clone(),
                        n: n.clone(),
                        k,
                        case: format!("{:?}", tag.case),
                        sigma: tag.sigma,
                        slice_dim: ks.len(),
                    });
                    tau0 += Rational::one();
                }
            }
        }
    }
    states.sort_by(|a, b| (&a.t, &a.n, a.k, &a.tau0).cmp(&(&b.t, &b.n, b.k, &b.tau0)));
    Ok(ClassificationTable { weight: [l1.clone(), l2.clone()], states })
}

/// Classification table of `V(λ1, λ2)`. The first representation in
/// `sources` containing the irrep supplies realized labels; otherwise the
/// model labels are used.
pub fn classify_weight(l1: &Rational, l2: &Rational, sources: &[Representation], uea: &Uea) -> Result<ClassifiedIrrep, GtError> {
    check_highest(l1, l2)?;
    for rep in sources {
        let irreps = rep.extract_irreps()?;
        let Some(irrep) = irreps.iter().find(|i| i.highest_pair() == (l1.clone(), l2.clone())) else {
            continue;
        };
        let v = validate_irrep(irrep, uea)?;
        if v.per_t.iter().all(|t| t.error.is_none()) {
            let per_t: Vec<_> = v.per_t.iter().map(|t| (t.t.clone(), t.labels.clone())).collect();
            return Ok(ClassifiedIrrep {
                table: table_from_labels(l1, l2, &per_t)?,
                origin: rep.label(),
                validation: Some(v),
            });
        }
    }
    let per_t = t_values(l1, l2)?
        .into_iter()
        .map(|t| {
            let g = RectangleGeometry::new(l1, l2, &t)?;
            Ok((t, label_chain(&g)?))
        })
        .collect::<Result<Vec<_>, GtError>>()?;
    Ok(ClassifiedIrrep { table: table_from_labels(l1, l2, &per_t)?, origin: "model".into(), validation: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn model_tables_count_states() {
        let u = Uea::new(5).unwrap();
        let t = classify_weight(&r(0), &r(-1), &[], &u).unwrap();
        assert_eq!(t.table.states.len(), 5);
        assert!(t.table.states.iter().all(|s| s.k == 0));
        assert_eq!(classify_weight(&r(0), &r(0), &[], &u).unwrap().table.states.len(), 1);
        let t = classify_weight(&r(-1), &r(-2), &[], &u).unwrap();
        assert_eq!(t.table.states.len(), 35);
    }

    #[test]
    fn realized_defining() {
        let u = Uea::new(5).unwrap();
        let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
        let v = validate_irrep(&irrep, &u).unwrap();
        let c = v.checks();
        assert!(c.labels_distinct && c.labels_complete && c.raising_below && c.raising_above && c.n0_agreement, "{:?}", v);
    }
}
