//! Cross-checks between independent models: the coordinate action on curves
//! against a free-group model of the punctured disc, glued together by the
//! taut-curve tracer.

mod common;

use common::{freegroup, tracer};
use garside::curves::{coord_of_round, roundness};
use garside::{GeneratorWord, RoundCurve};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn round_word(c: &RoundCurve) -> Vec<isize> {
    (c.lo()..=c.hi()).map(|j| j as isize).collect()
}

/// The free-group engine must itself satisfy the braid relations; this keeps
/// the oracle honest before it is used to judge the library.
#[test]
fn free_group_action_satisfies_braid_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 3..=5usize {
        for _ in 0..40 {
            let len = rng.gen_range(1..=6);
            let word: Vec<isize> = (0..len)
                .map(|_| {
                    let l = rng.gen_range(1..=n) as isize;
                    if rng.gen::<bool>() {
                        l
                    } else {
                        -l
                    }
                })
                .collect();
            for i in 1..n - 1 {
                let (i, j) = (i as isize, i as isize + 1);
                let lhs = freegroup::apply_word(&word, &[i, j, i]);
                let rhs = freegroup::apply_word(&word, &[j, i, j]);
                assert_eq!(freegroup::reduce(&lhs), freegroup::reduce(&rhs));
            }
            for i in 1..n {
                let g = i as isize;
                let back = freegroup::apply_word(&word, &[g, -g]);
                assert_eq!(freegroup::reduce(&back), freegroup::reduce(&word));
            }
        }
    }
}

/// The tracer must read a round curve's coordinates back as the product of
/// the enclosed punctures' loops.
#[test]
fn tracer_reads_round_curves() {
    for n in 3..=6usize {
        for c in RoundCurve::all(n) {
            let coord = coord_of_round(c, n).unwrap();
            let words = tracer::boundary_words(&coord);
            assert_eq!(words.len(), 1, "round curve {c} traced to {words:?}");
            assert_eq!(
                freegroup::canonical(&words[0]),
                freegroup::canonical(&round_word(&c)),
                "round curve {c} at n={n}"
            );
        }
    }
}

/// The bridge: acting in coordinates and then reading the curve through the
/// tracer must agree with acting on the boundary word in the free group.
/// This pins the geometric meaning of the coordinate update, including its
/// chirality, against a fully independent model.
#[test]
fn coordinate_action_matches_free_group_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for trial in 0..400 {
        let n = rng.gen_range(3..=5);
        let curves = RoundCurve::all(n);
        let start = curves[rng.gen_range(0..curves.len())];
        let len = rng.gen_range(0..=8);
        let w = GeneratorWord::random(n, len, &mut rng).unwrap();
        let gens = w.to_signed_letters();

        let coord = coord_of_round(start, n).unwrap().apply_word(&w).unwrap();
        let traced = tracer::boundary_words(&coord);
        assert_eq!(
            traced.len(),
            1,
            "trial {trial}: image of {start} under {w} traced to {} components",
            traced.len()
        );
        let lhs = freegroup::canonical(&traced[0]);
        let rhs = freegroup::canonical(&freegroup::apply_word(&round_word(&start), &gens));
        assert_eq!(lhs, rhs, "trial {trial}: n={n}, start={start}, word={w}");
    }
}

/// Roundness by table lookup must agree with roundness read through the
/// tracer: a coordinate vector is round exactly when its traced boundary
/// word is a block of consecutive puncture loops.
#[test]
fn roundness_agrees_with_traced_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..300 {
        let n = rng.gen_range(3..=5);
        let curves = RoundCurve::all(n);
        let start = curves[rng.gen_range(0..curves.len())];
        let len = rng.gen_range(0..=6);
        let w = GeneratorWord::random(n, len, &mut rng).unwrap();
        let coord = coord_of_round(start, n).unwrap().apply_word(&w).unwrap();
        let table_verdict = roundness(&coord);
        let traced = freegroup::canonical(&tracer::boundary_words(&coord)[0]);
        let word_verdict = RoundCurve::all(n)
            .into_iter()
            .find(|c| freegroup::canonical(&round_word(c)) == traced);
        assert_eq!(table_verdict, word_verdict, "n={n} start={start} w={w}");
    }
}
