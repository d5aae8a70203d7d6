use super::*;
use crate::budget::{Budget, DEFAULT_BUDGET};
use crate::weights::{is_minuscule, partitions_of, weyl_dimension};
use num_bigint::BigInt;

fn cw(parts: &[i64]) -> DominantCoweight {
    DominantCoweight::new(parts.to_vec()).unwrap()
}

fn cws(list: &[&[i64]]) -> Vec<DominantCoweight> {
    list.iter().map(|p| cw(p)).collect()
}

fn oracle(mus: &[DominantCoweight], lam: &DominantCoweight) -> u64 {
    let budget = Budget::new(DEFAULT_BUDGET, "repring test oracle");
    schur_product_oracle(mus, lam, &budget).unwrap()
}

// --- Littlewood-Richardson rule ---

#[test]
fn lr_examples_match_the_schur_oracle() {
    // Values independently derivable from s_(1)*s_(1) = s_(2) + s_(1,1).
    assert_eq!(oracle(&cws(&[&[1, 0], &[1, 0]]), &cw(&[2, 0])), 1);
    assert_eq!(oracle(&cws(&[&[1, 0], &[1, 0]]), &cw(&[1, 1])), 1);
    assert_eq!(lr_coefficient(&cw(&[1, 0]), &cw(&[1, 0]), &cw(&[2, 0])).unwrap(), 1);
    assert_eq!(lr_coefficient(&cw(&[1, 0]), &cw(&[1, 0]), &cw(&[1, 1])).unwrap(), 1);
}

#[test]
fn lr_trivial_cases() {
    // Tensoring with the trivial representation.
    assert_eq!(lr_coefficient(&cw(&[3, 1]), &cw(&[0, 0]), &cw(&[3, 1])).unwrap(), 1);
    // Sum mismatch.
    assert_eq!(lr_coefficient(&cw(&[1, 0]), &cw(&[1, 0]), &cw(&[3, 0])).unwrap(), 0);
    // Not a skew shape.
    assert_eq!(lr_coefficient(&cw(&[2, 0]), &cw(&[2, 0]), &cw(&[1, 1])).unwrap(), 0);
}

#[test]
fn lr_rejects_bad_inputs() {
    assert!(lr_coefficient(&cw(&[1, -1]), &cw(&[1, 0]), &cw(&[1, 0])).is_err());
    assert!(lr_coefficient(&cw(&[1]), &cw(&[1, 0]), &cw(&[1, 0])).is_err());
}

#[test]
fn lr_is_symmetric_in_the_factors() {
    for total in 0..=6i64 {
        for lam in partitions_of(total, 3) {
            let lam = DominantCoweight::from_trimmed(&lam, 3).unwrap();
            for s in 0..=total {
                for mu in partitions_of(s, 3) {
                    let mu = DominantCoweight::from_trimmed(&mu, 3).unwrap();
                    for nu in partitions_of(total - s, 3) {
                        let nu = DominantCoweight::from_trimmed(&nu, 3).unwrap();
                        assert_eq!(
                            lr_coefficient(&mu, &nu, &lam).unwrap(),
                            lr_coefficient(&nu, &mu, &lam).unwrap(),
                            "mu={mu} nu={nu} lam={lam}"
                        );
                    }
                }
            }
        }
    }
}

// --- tensor multiplicities ---

#[test]
fn tensor_examples() {
    assert_eq!(tensor_multiplicity(&cws(&[&[1, 0], &[1, 0]]), &cw(&[1, 1])).unwrap(), 1);
    // Oracle-derived in three variables: the standard cube contains (2,1,0) twice.
    assert_eq!(
        tensor_multiplicity(&cws(&[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]), &cw(&[2, 1, 0])).unwrap(),
        2
    );
    assert_eq!(
        oracle(&cws(&[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]), &cw(&[2, 1, 0])),
        2
    );
}

#[test]
fn cartan_component_has_multiplicity_one() {
    for mus in [
        cws(&[&[2, 0], &[1, 1]]),
        cws(&[&[3, 1, 0], &[1, 1, 0], &[2, 0, 0]]),
        cws(&[&[4, 0]]),
    ] {
        let n = mus[0].rank();
        let top = DominantCoweight::sum_of(&mus, n).unwrap();
        assert_eq!(tensor_multiplicity(&mus, &top).unwrap(), 1, "mu={mus:?}");
    }
}

#[test]
fn empty_product_contains_only_zero() {
    assert_eq!(tensor_multiplicity(&[], &cw(&[0, 0])).unwrap(), 1);
    assert_eq!(tensor_multiplicity(&[], &cw(&[1, -1])).unwrap(), 0);
}

#[test]
fn multiplicity_is_invariant_under_central_shifts() {
    let mus = cws(&[&[1, 0], &[2, 1]]);
    let shifted = cws(&[&[0, -1], &[1, 0]]);
    for lam in partitions_of(4, 2) {
        let lam = DominantCoweight::from_trimmed(&lam, 2).unwrap();
        let lam_shifted = lam.shift(-2);
        assert_eq!(
            tensor_multiplicity(&mus, &lam).unwrap(),
            tensor_multiplicity(&shifted, &lam_shifted).unwrap(),
            "lam={lam}"
        );
    }
}

#[test]
fn oracle_agrees_with_lr_on_a_sweep() {
    // n <= 3, r <= 3, |mu_bullet| <= 5 here; the acceptance suite pushes the
    // full range.
    let shapes: Vec<Vec<i64>> = (1..=3)
        .flat_map(|s| partitions_of(s, 3))
        .collect();
    let mut checked = 0usize;
    for a in &shapes {
        for b in &shapes {
            if a.iter().sum::<i64>() + b.iter().sum::<i64>() > 5 {
                continue;
            }
            let mus = vec![
                DominantCoweight::from_trimmed(a, 3).unwrap(),
                DominantCoweight::from_trimmed(b, 3).unwrap(),
            ];
            let total: i64 = a.iter().sum::<i64>() + b.iter().sum::<i64>();
            for lam in partitions_of(total, 3) {
                let lam = DominantCoweight::from_trimmed(&lam, 3).unwrap();
                assert_eq!(
                    tensor_multiplicity(&mus, &lam).unwrap(),
                    oracle(&mus, &lam),
                    "mus={mus:?} lam={lam}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn dimension_identity_on_small_products() {
    // sum_lam mult(mu_bullet, lam) * dim(lam) = prod dim(mu_i).
    for mus in [
        cws(&[&[1, 0, 0], &[1, 1, 0]]),
        cws(&[&[2, 0, 0], &[2, 1, 0]]),
        cws(&[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]),
    ] {
        let n = mus[0].rank();
        let total: i64 = mus.iter().map(DominantCoweight::sum).sum();
        let mut lhs = BigInt::from(0);
        for lam in partitions_of(total, n) {
            let lam = DominantCoweight::from_trimmed(&lam, n).unwrap();
            let m = tensor_multiplicity(&mus, &lam).unwrap();
            lhs += BigInt::from(m) * weyl_dimension(&lam);
        }
        let rhs: BigInt = mus.iter().map(weyl_dimension).product();
        assert_eq!(lhs, rhs, "mus={mus:?}");
    }
}

#[test]
fn multiplicity_is_order_invariant() {
    let a = cws(&[&[2, 0, 0], &[1, 1, 0], &[1, 0, 0]]);
    let b = cws(&[&[1, 0, 0], &[2, 0, 0], &[1, 1, 0]]);
    let c = cws(&[&[1, 1, 0], &[1, 0, 0], &[2, 0, 0]]);
    for lam in partitions_of(5, 3) {
        let lam = DominantCoweight::from_trimmed(&lam, 3).unwrap();
        let m = tensor_multiplicity(&a, &lam).unwrap();
        assert_eq!(m, tensor_multiplicity(&b, &lam).unwrap(), "lam={lam}");
        assert_eq!(m, tensor_multiplicity(&c, &lam).unwrap(), "lam={lam}");
    }
}

// --- weight sets ---

#[test]
fn weight_set_examples() {
    let ws = weight_set(&cw(&[1, 0])).unwrap();
    assert_eq!(ws.len(), 2);
    assert!(ws.contains(&[1, 0]) && ws.contains(&[0, 1]));

    let ws = weight_set(&cw(&[2, 0])).unwrap();
    assert_eq!(ws.len(), 3);
    assert!(ws.contains(&[1, 1]) && ws.contains(&[0, 2]));

    let ws = weight_set(&cw(&[0, 0, 0])).unwrap();
    assert_eq!(ws.len(), 1);
}

#[test]
fn weight_sets_are_permutation_closed_and_handle_negatives() {
    for mu in [cw(&[2, 1, 0]), cw(&[1, 0, -1]), cw(&[3, 1])] {
        let ws = weight_set(&mu).unwrap();
        for w in ws.iter() {
            for p in unique_permutations(w) {
                assert!(ws.contains(&p), "mu={mu} missing permutation {p:?} of {w:?}");
            }
        }
        // The highest weight itself is always present.
        assert!(ws.contains(mu.parts()));
    }
}

#[test]
fn minuscule_weight_set_is_a_single_orbit() {
    for mu in [cw(&[1, 0]), cw(&[1, 1, 0]), cw(&[1, 1, 1])] {
        assert!(is_minuscule(&mu));
        let ws = weight_set(&mu).unwrap();
        assert_eq!(ws.len(), unique_permutations(mu.parts()).len(), "mu={mu}");
    }
}

// --- sumset lemma ---

#[test]
fn sumset_examples() {
    assert!(sumset_lemma_check(&cws(&[&[1, 0], &[1, 0]])).unwrap());
    assert!(sumset_lemma_check(&cws(&[&[2, 1, 0]])).unwrap());
    assert!(sumset_lemma_check(&cws(&[&[1, 0, 0], &[1, 1, 0]])).unwrap());
    assert!(sumset_lemma_check(&[]).unwrap());
}

// --- witnesses ---

#[test]
fn minuscule_witness_examples() {
    let w = minuscule_witness(&cws(&[&[1, 0], &[1, 0]]), &cw(&[1, 1]))
        .unwrap()
        .unwrap();
    assert_eq!(w, vec![vec![1, 0], vec![0, 1]]);

    let w = minuscule_witness(&cws(&[&[1, 0]]), &cw(&[1, 0])).unwrap().unwrap();
    assert_eq!(w, vec![vec![1, 0]]);

    let w = minuscule_witness(&cws(&[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]), &cw(&[1, 1, 1]))
        .unwrap()
        .unwrap();
    assert_eq!(w, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
}

#[test]
fn minuscule_witness_rejects_non_minuscule_factors() {
    assert!(minuscule_witness(&cws(&[&[2, 0]]), &cw(&[2, 0])).is_err());
}

#[test]
fn minuscule_witness_exists_for_every_dominated_target() {
    // Prop-style sweep: products of minuscule fundamentals in rank 3.
    let minuscules = cws(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]]);
    for a in &minuscules {
        for b in &minuscules {
            let mus = vec![a.clone(), b.clone()];
            let total = DominantCoweight::sum_of(&mus, 3).unwrap();
            for lam in crate::weights::dominated_partitions(&total).unwrap() {
                let w = minuscule_witness(&mus, &lam).unwrap();
                let w = w.unwrap_or_else(|| panic!("no witness for {mus:?} -> {lam}"));
                let mut sum = vec![0i64; 3];
                for (v, mu) in w.iter().zip(&mus) {
                    let mut sorted = v.clone();
                    sorted.sort_unstable_by(|x, y| y.cmp(x));
                    assert_eq!(&sorted, mu.parts(), "summand must rearrange the factor");
                    for (s, x) in sum.iter_mut().zip(v) {
                        *s += x;
                    }
                }
                assert_eq!(&sum, lam.parts());
            }
        }
    }
}

#[test]
fn prv_witness_examples() {
    let w = prv_witness(&cws(&[&[2, 0], &[2, 0]]), &cw(&[3, 1])).unwrap().unwrap();
    assert_eq!(w.summands, vec![vec![2, 0], vec![1, 1]]);
    assert_eq!(w.mu_prime, cws(&[&[2, 0], &[1, 1]]));

    let w = prv_witness(&cws(&[&[2, 0], &[2, 0]]), &cw(&[2, 2])).unwrap().unwrap();
    assert_eq!(w.summands, vec![vec![2, 0], vec![0, 2]]);
    assert_eq!(w.mu_prime, cws(&[&[2, 0], &[2, 0]]));
}

#[test]
fn prv_witness_at_the_top_uses_identity_permutations() {
    let mus = cws(&[&[3, 1, 0], &[2, 2, 0]]);
    let top = DominantCoweight::sum_of(&mus, 3).unwrap();
    let w = prv_witness(&mus, &top).unwrap().unwrap();
    assert_eq!(w.mu_prime, mus);
    assert_eq!(w.summands, vec![vec![3, 1, 0], vec![2, 2, 0]]);
}

#[test]
fn prv_witness_is_none_only_outside_the_support() {
    // lam not dominated by |mu_bullet| (unequal prefix) has no witness.
    let mus = cws(&[&[1, 1], &[1, 1]]);
    assert!(prv_witness(&mus, &cw(&[3, 1])).unwrap().is_none());
}

#[test]
fn rep_nonvanishing_support_condition() {
    let mus = cws(&[&[1, 0], &[1, 0]]);
    assert!(rep_nonvanishing(&mus, &cw(&[2, 0])).unwrap());
    assert!(rep_nonvanishing(&mus, &cw(&[1, 1])).unwrap());
    assert!(!rep_nonvanishing(&mus, &cw(&[3, -1])).unwrap());
}
