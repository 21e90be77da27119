//! Independent check of the path basis: for every multidegree, the quotient
//! of the span of paths by the span of `u * d_e W * v` has dimension 1 on
//! basis tuples and 0 elsewhere.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use num_traits::Zero;
use toda_core::jacobian::{arrows, cyclic_derivatives, is_basis_tuple, path_basis, Arrow, PathTuple};

type Word = (usize, Vec<Arrow>);

fn paths_up_to(n: usize, len: usize) -> Vec<Word> {
    let arrows = arrows(n);
    let mut out: Vec<Word> = (1..=2 * n).map(|v| (v, Vec::new())).collect();
    let mut frontier = out.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for (s, p) in &frontier {
            let end = p.last().map_or(*s, |a| a.target());
            for a in arrows.iter().filter(|a| a.source() == end) {
                let mut q = p.clone();
                q.push(*a);
                next.push((*s, q));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn end_of(w: &Word) -> usize {
    w.1.last().map_or(w.0, |a| a.target())
}

fn rank(rows: &mut [Vec<Rational64>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c];
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] / pivot;
                for j in c..cols {
                    let v = rows[r][j];
                    rows[i][j] -= f * v;
                }
            }
        }
        r += 1;
    }
    r
}

fn graded_dimensions(n: usize, max_len: usize) -> BTreeMap<PathTuple, usize> {
    let words = paths_up_to(n, max_len);
    let mut pieces: BTreeMap<PathTuple, Vec<Word>> = BTreeMap::new();
    for w in &words {
        pieces.entry(PathTuple::of_path(w.0, &w.1)).or_default().push(w.clone());
    }
    let mut relations: BTreeMap<PathTuple, Vec<Vec<(i64, Word)>>> = BTreeMap::new();
    for (e, d) in cyclic_derivatives(n) {
        if d.is_empty() {
            continue;
        }
        let rel_len = d[0].1.len();
        for u in words.iter().filter(|u| end_of(u) == e.target()) {
            for v in words.iter().filter(|v| v.0 == e.source()) {
                if u.1.len() + rel_len + v.1.len() > max_len {
                    continue;
                }
                let elem: Vec<(i64, Word)> = d
                    .iter()
                    .map(|(sign, mid)| {
                        let mut p = u.1.clone();
                        p.extend(mid);
                        p.extend(&v.1);
                        (*sign, (u.0, p))
                    })
                    .collect();
                let t = PathTuple::of_path(elem[0].1 .0, &elem[0].1 .1);
                relations.entry(t).or_default().push(elem);
            }
        }
    }
    pieces
        .into_iter()
        .map(|(t, ws)| {
            let index: BTreeMap<&Word, usize> = ws.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut rows: Vec<Vec<Rational64>> = relations
                .get(&t)
                .map(|rs| {
                    rs.iter()
                        .map(|r| {
                            let mut row = vec![Rational64::zero(); ws.len()];
                            for (sign, w) in r {
                                row[index[w]] += Rational64::from(*sign);
                            }
                            row
                        })
                        .collect()
                })
                .unwrap_or_default();
            (t, ws.len() - rank(&mut rows))
        })
        .collect()
}

#[test]
fn basis_matches_quotient_dimensions() {
    for n in 1..=3 {
        let max_len = 2 * n + 1;
        let dims = graded_dimensions(n, max_len);
        let basis: BTreeSet<PathTuple> = path_basis(n).into_iter().collect();
        for (t, d) in &dims {
            let expected = usize::from(is_basis_tuple(n, t));
            assert_eq!(*d, expected, "n={n} {t:?}");
        }
        for t in &basis {
            assert!(t.len() <= max_len, "basis tuple beyond the checked length: {t:?}");
            assert_eq!(dims.get(t), Some(&1), "n={n} {t:?}");
        }
    }
}
