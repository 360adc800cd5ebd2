use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SuiteError, Tally};
use crate::arith::{Rational, SparseMatrix};
use crate::lie::Weight;
use crate::report::{Check, VerificationReport};
use crate::uea::{evaluate, IdentityCheck, IndexSet, CommutatorSign, Uea, UeaElement};

#[derive(Debug, Clone, Copy)]
pub struct IdentityOptions {
    /// Rank `n` of `o_{2n+1}`.
    pub n: usize,
    /// Include the largest index sets (`|I| = 2n`) of `o_7`.
    pub slow: bool,
    pub seed: u64,
    /// Random triples for the associativity check.
    pub samples: usize,
}

impl IdentityOptions {
    pub fn new(n: usize) -> Self {
        IdentityOptions { n, slow: false, seed: super::DEFAULT_SEED, samples: 24 }
    }
}

/// Symbolic and matrix tally for one family.
struct Family {
    symbolic: Tally,
    matrix: Tally,
}

impl Family {
    fn new() -> Self {
        Family { symbolic: Tally::new(), matrix: Tally::new() }
    }

    fn add(&mut self, uea: &Uea, c: &IdentityCheck, mats: &[SparseMatrix]) {
        self.symbolic.record(c.holds(), || format!("{} {}: residual {}", c.name, c.params, c.residual.display(uea.algebra())));
        self.matrix.record(c.holds_in(mats), || format!("{} {}", c.name, c.params));
    }

    fn checks(self, id: &str, out: &mut VerificationReport) {
        let (s, m) = (self.symbolic, self.matrix);
        out.push(Check::from_bool(format!("{}.symbolic", id), s.ok(), &s));
        out.push(Check::from_bool(format!("{}.matrix", id), m.ok(), &m));
    }
}

fn sizes(opts: &IdentityOptions, big_n: usize) -> Vec<usize> {
    let top = if opts.n >= 3 && !opts.slow { 4 } else { big_n - 1 };
    (2..=top.min(big_n - 1)).step_by(2).collect()
}

/// Commutator rule, splitting formulas, expansion along `-n`, centrality of
/// the Capelli elements, weight shifts of `PfF_{hat ±n}`, their commutation
/// with `o_{2n-1}`, and randomized associativity of the normal ordering.
/// Each family is checked symbolically and in the defining representation.
pub fn identities_suite(opts: &IdentityOptions) -> Result<VerificationReport, SuiteError> {
    if !(1..=3).contains(&opts.n) {
        return Err(SuiteError::Usage(format!("--n must be 1, 2 or 3 (got {})", opts.n)));
    }
    let started = Instant::now();
    let big_n = 2 * opts.n + 1;
    let uea = Uea::new(big_n)?;
    let alg = uea.algebra().clone();
    let mats = alg.defining_sparse();
    let idx = alg.indices();
    let full = uea.full_set();
    let ni = opts.n as i32;
    let mut out = VerificationReport::new(format!("verify-identities-o{}", big_n));

    for k in sizes(opts, big_n) {
        let sets = full.subsets(k);
        let mut fam = Family::new();
        let mut flipped_sign = Tally::new();
        for set in &sets {
            for &j1 in &idx {
                for &j2 in &idx {
                    if j1 == j2 {
                        continue;
                    }
                    let c = uea.check_pf_commutator(set, j1, j2, CommutatorSign::Standard)?;
                    fam.add(&uea, &c, &mats);
                    let alt = uea.check_pf_commutator(set, j1, j2, CommutatorSign::Flipped)?;
                    flipped_sign.record(alt.holds(), || alt.params.clone());
                }
            }
        }
        fam.checks(&format!("pf-commutator.k{}", k), &mut out);
        // the opposite single-replacement signs are an alternative reading, not a requirement
        if flipped_sign.failures > 0 {
            out.push(Check::anomaly(format!("pf-commutator.k{}.opposite-sign", k), &flipped_sign));
        }

        let mut split = Family::new();
        let mut sum = Family::new();
        let mut expand = Family::new();
        for set in &sets {
            for p in (0..=k).step_by(2) {
                split.add(&uea, &uea.check_split(set, p)?, &mats);
            }
            sum.add(&uea, &uea.check_split_sum(set)?, &mats);
            if set.contains(-ni) {
                expand.add(&uea, &uea.check_expansion(set)?, &mats);
            }
        }
        split.checks(&format!("split.k{}", k), &mut out);
        sum.checks(&format!("split-sum.k{}", k), &mut out);
        expand.checks(&format!("expansion.k{}", k), &mut out);
    }

    for k in sizes(opts, big_n) {
        let mut fam = Family::new();
        for c in uea.check_capelli_central(k)? {
            fam.add(&uea, &c, &mats);
        }
        fam.checks(&format!("capelli-central.c{}", k), &mut out);
    }

    // weight shifts and commutation with the smaller orthogonal algebra
    for r in [ni, -ni] {
        let pf = uea.pfaffian(&IndexSet::hat(&alg, r)?);
        let shift = uea.weight_shift_of(&pf)?;
        let mut expect = Weight::basis(opts.n, ni);
        if r < 0 {
            expect = -&expect;
        }
        out.push(Check::from_bool(format!("weight-shift.hat{}", r), shift == expect, format!("shift {} expected {}", shift, expect)));
        let mut fam = Family::new();
        for g in alg.generators().iter().filter(|g| g.i.abs() < ni && g.j.abs() < ni) {
            fam.add(&uea, &uea.check_hat_commutes(r, g.i, g.j)?, &mats);
        }
        if opts.n > 1 {
            fam.checks(&format!("hat-commutes.hat{}", r), &mut out);
        }
    }

    out.extend(associativity(&uea, &mats, opts));
    Ok(out.finish(started)?)
}

fn random_element(uea: &Uea, rng: &mut ChaCha8Rng) -> UeaElement {
    let d = uea.algebra().dim();
    let mut e = UeaElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=2);
        let w: Vec<u16> = (0..len).map(|_| rng.gen_range(0..d) as u16).collect();
        let c = Rational::frac(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        e.add_term(w, c);
    }
    e
}

/// `(ab)c = a(bc)` after normal ordering, and the matrix image of a normal
/// form equals that of the raw product.
fn associativity(uea: &Uea, mats: &[SparseMatrix], opts: &IdentityOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut assoc, mut oracle) = (Tally::new(), Tally::new());
    for s in 0..opts.samples {
        let (a, b, c) = (random_element(uea, &mut rng), random_element(uea, &mut rng), random_element(uea, &mut rng));
        let left = uea.multiply(&uea.multiply(&a, &b), &c);
        let right = uea.multiply(&a, &uea.multiply(&b, &c));
        assoc.record(left == right, || format!("sample {}", s));
        let raw = a.concat(&b).concat(&c);
        oracle.record(evaluate(&raw, mats) == evaluate(&left, mats), || format!("sample {}", s));
    }
    let witness = |t: &Tally| serde_json::json!({ "seed": opts.seed, "tally": t });
    vec![
        Check::from_bool("normal-order.associative", assoc.ok(), witness(&assoc)),
        Check::from_bool("normal-order.matrix", oracle.ok(), witness(&oracle)),
    ]
}
