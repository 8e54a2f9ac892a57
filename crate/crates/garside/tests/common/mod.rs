//! Shared oracles for the integration tests.
//!
//! Everything here recomputes answers by routes independent of the library
//! internals, so agreement is meaningful: curves are cross-checked through a
//! free-group model of the punctured disc, and the taut-curve tracer rebuilds
//! an explicit curve from a coordinate vector and reads its boundary word.

#![allow(dead_code)]

/// Cyclic words in the free group on `x_1..x_n`, as vectors of nonzero
/// signed letters (`+j` for `x_j`, `-j` for its inverse), considered up to
/// free reduction, rotation, and inversion (curves are unoriented).
pub mod freegroup {
    /// Free reduction of a linear word.
    pub fn reduce(word: &[isize]) -> Vec<isize> {
        let mut out: Vec<isize> = Vec::with_capacity(word.len());
        for &l in word {
            assert!(l != 0, "letters are nonzero");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }

    /// Cyclic reduction: free reduction plus cancellation across the seam.
    pub fn cyclic_reduce(word: &[isize]) -> Vec<isize> {
        let mut w = reduce(word);
        while w.len() >= 2 && w.first() == w.last().map(|&l| -l).as_ref() {
            w.pop();
            w.remove(0);
        }
        w
    }

    fn invert(word: &[isize]) -> Vec<isize> {
        word.iter().rev().map(|&l| -l).collect()
    }

    /// Canonical representative of a curve word: the lexicographically least
    /// rotation of the cyclically reduced word or of its inverse.
    pub fn canonical(word: &[isize]) -> Vec<isize> {
        let w = cyclic_reduce(word);
        if w.is_empty() {
            return w;
        }
        let mut best: Option<Vec<isize>> = None;
        for cand in [w.clone(), invert(&w)] {
            for r in 0..cand.len() {
                let mut rot = cand[r..].to_vec();
                rot.extend_from_slice(&cand[..r]);
                if best.as_ref().map_or(true, |b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap()
    }

    /// Image of the base letter `x_k` under one signed braid generator, for
    /// the convention in which the positive generator swaps punctures
    /// clockwise with the left puncture passing over the right one.
    fn letter_image(k: isize, g: isize) -> Vec<isize> {
        debug_assert!(k > 0 && g != 0);
        let i = g.unsigned_abs() as isize;
        if g > 0 {
            if k == i {
                vec![i + 1]
            } else if k == i + 1 {
                vec![-(i + 1), i, i + 1]
            } else {
                vec![k]
            }
        } else if k == i {
            vec![i, i + 1, -i]
        } else if k == i + 1 {
            vec![i]
        } else {
            vec![k]
        }
    }

    /// Applies one signed braid generator to a word.
    pub fn apply_gen(word: &[isize], g: isize) -> Vec<isize> {
        let mut out = Vec::new();
        for &l in word {
            if l > 0 {
                out.extend(letter_image(l, g));
            } else {
                let mut img = letter_image(-l, g);
                img.reverse();
                for x in &mut img {
                    *x = -*x;
                }
                out.extend(img);
            }
        }
        reduce(&out)
    }

    /// Applies a whole braid word, left to right.
    pub fn apply_word(word: &[isize], gens: &[isize]) -> Vec<isize> {
        let mut cur = word.to_vec();
        for &g in gens {
            cur = apply_gen(&cur, g);
        }
        cur
    }
}

/// Reconstruction of a taut curve from a coordinate vector, and the reading
/// of its boundary word (one `x_j^±` per crossing of the downward ray below
/// puncture `j`).
pub mod tracer {
    use garside::CurveCoord;

    /// Arcs of one slab (the vertical strip containing one puncture):
    /// how many pass above the puncture, below it, and how many turn back
    /// around it toward the left or right wall.
    #[derive(Clone, Copy, Debug)]
    struct Slab {
        above: i64,
        below: i64,
        loops_left: i64,
        loops_right: i64,
    }

    /// Wall crossing counts `e_1..e_{n-1}` for the minimal taut curve:
    /// the least `e_1` keeping every wall count nonnegative and every slab
    /// wide enough for its `a` coordinate, so that no boundary-parallel
    /// component is present.
    pub fn wall_counts(c: &CurveCoord) -> Vec<i64> {
        let n = c.n();
        assert!(n >= 3, "tracer needs at least one interior puncture");
        // prefix[k] = b_1 + … + b_{k-1}, so e_k = e_1 − 2·prefix[k].
        let mut prefix = vec![0i64; n];
        for k in 2..n {
            prefix[k] = prefix[k - 1] + c.b()[k - 2];
        }
        let mut e1 = 0i64;
        for k in 1..n {
            e1 = e1.max(2 * prefix[k]);
        }
        for i in 1..=(n - 2) {
            let a = c.a()[i - 1];
            e1 = e1.max(2 * a.abs() + 2 * prefix[i].max(prefix[i + 1]));
        }
        (1..n).map(|k| e1 - 2 * prefix[k]).collect()
    }

    fn slabs(c: &CurveCoord, e: &[i64]) -> Vec<Slab> {
        let n = c.n();
        let wall = |k: usize| -> i64 {
            if k == 0 || k == n {
                0
            } else {
                e[k - 1]
            }
        };
        (1..=n)
            .map(|j| {
                if j == 1 {
                    Slab { above: 0, below: 0, loops_left: 0, loops_right: wall(1) / 2 }
                } else if j == n {
                    Slab { above: 0, below: 0, loops_left: wall(n - 1) / 2, loops_right: 0 }
                } else {
                    let a = c.a()[j - 2];
                    let b = c.b()[j - 2];
                    let m = wall(j - 1).min(wall(j));
                    let slab = Slab {
                        above: m / 2 + a,
                        below: m / 2 - a,
                        loops_left: b.max(0),
                        loops_right: (-b).max(0),
                    };
                    assert!(slab.above >= 0 && slab.below >= 0, "infeasible slab");
                    assert_eq!(
                        wall(j - 1),
                        slab.above + slab.below + 2 * slab.loops_left,
                        "left wall count mismatch at slab {j}"
                    );
                    assert_eq!(
                        wall(j),
                        slab.above + slab.below + 2 * slab.loops_right,
                        "right wall count mismatch at slab {j}"
                    );
                    slab
                }
            })
            .collect()
    }

    /// A position on a wall together with a direction of travel.
    #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
    struct State {
        wall: usize,
        pos: i64,
        rightward: bool,
    }

    /// Follows every component of the curve, returning one boundary word per
    /// component (letters in traversal order; orientation is arbitrary).
    pub fn boundary_words(c: &CurveCoord) -> Vec<Vec<isize>> {
        let n = c.n();
        let e = wall_counts(c);
        let slabs = slabs(c, &e);
        let mut visited = std::collections::HashSet::new();
        let mut words = Vec::new();
        for wall in 1..n {
            for pos in 1..=e[wall - 1] {
                let start = State { wall, pos, rightward: true };
                if visited.contains(&start) {
                    continue;
                }
                let mut word = Vec::new();
                let mut cur = start;
                loop {
                    visited.insert(cur);
                    visited.insert(State { rightward: !cur.rightward, ..cur });
                    cur = step(cur, &slabs, &mut word);
                    if cur == start {
                        break;
                    }
                }
                words.push(word);
            }
        }
        words
    }

    /// Traverses one slab: from a wall position heading into the slab, find
    /// the arc attached there, emit its ray crossing (if any), and come out
    /// at the far end of the arc.
    fn step(s: State, slabs: &[Slab], word: &mut Vec<isize>) -> State {
        // Heading right from wall k we enter slab k+1; heading left, slab k.
        let j = if s.rightward { s.wall + 1 } else { s.wall };
        let slab = slabs[j - 1];
        let x = j as isize;
        let v = s.pos;
        if s.rightward {
            // Entering through the left edge: above arcs on top, then the
            // nested left-turning loops, then the below arcs.
            if v <= slab.above {
                State { wall: j, pos: v, rightward: true }
            } else if v <= slab.above + 2 * slab.loops_left {
                let v2 = 2 * slab.above + 2 * slab.loops_left + 1 - v;
                // A left loop passes above the puncture, then back under it:
                // downward traversal crosses the lower ray right-to-left.
                word.push(if v < v2 { -x } else { x });
                State { wall: j - 1, pos: v2, rightward: false }
            } else {
                let t = v - slab.above - 2 * slab.loops_left;
                word.push(x);
                State {
                    wall: j,
                    pos: slab.above + 2 * slab.loops_right + t,
                    rightward: true,
                }
            }
        } else {
            // Entering through the right edge: mirror layout.
            if v <= slab.above {
                State { wall: j - 1, pos: v, rightward: false }
            } else if v <= slab.above + 2 * slab.loops_right {
                let v2 = 2 * slab.above + 2 * slab.loops_right + 1 - v;
                // A right loop crosses the lower ray left-to-right on its
                // downward traversal.
                word.push(if v < v2 { x } else { -x });
                State { wall: j, pos: v2, rightward: true }
            } else {
                let t = v - slab.above - 2 * slab.loops_right;
                word.push(-x);
                State {
                    wall: j - 1,
                    pos: slab.above + 2 * slab.loops_left + t,
                    rightward: false,
                }
            }
        }
    }
}
