use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;

use super::*;
use crate::qt_field::{QTPoly, QTScalar, TLaurent};

fn mp(s: &str) -> MPartition {
    s.parse().unwrap()
}

#[test]
fn composition_diagram() {
    let d = diagram_of_composition(&[0, 2, 1, 3, 2, 0, 2, 0, 0]);
    let circles: Vec<usize> = d.rows.iter().map(|r| r.circle.unwrap()).collect();
    assert_eq!(circles, vec![4, 2, 5, 7, 3, 1, 6, 8, 9]);
}

#[test]
fn mpartition_diagram() {
    let d = diagram_of(&mp("2,0,2,1|3,2"));
    let rows: Vec<(u32, Option<usize>)> = d.rows.iter().map(|r| (r.len, r.circle)).collect();
    assert_eq!(rows, vec![(3, None), (2, Some(1)), (2, Some(3)), (2, None), (1, Some(4)), (0, Some(2))]);
    assert_eq!(d.row_of_circle(2), Some(6));
    let plain = diagram_of(&mp("|3,1,1"));
    assert!(plain.rows.iter().all(|r| r.circle.is_none()));
    assert_eq!(plain.rows.iter().map(|r| r.len).collect::<Vec<_>>(), vec![3, 1, 1]);
}

#[test]
fn eta_bar_examples() {
    assert_eq!(eta_bar(&[1, 0], 1), QTScalar::q());
    assert_eq!(eta_bar(&[1, 0], 2), QTScalar::qt_pow(0, -1));
    for i in 1..=4 {
        assert_eq!(eta_bar(&[0, 0, 0, 0], i), QTScalar::qt_pow(0, 1 - i as i32));
    }
}

#[test]
fn eta_bar_is_injective() {
    for n in 1..=4usize {
        for d in 0..=4u32 {
            let mut seen = HashSet::new();
            for eta in compositions(n, d) {
                let v: Vec<QTScalar> = (1..=n).map(|i| eta_bar(&eta, i)).collect();
                assert!(seen.insert(v), "eigenvalues repeat for {eta:?}");
            }
        }
    }
}

#[test]
fn lambda_upper_examples() {
    let l = mp("2,0,2,1|3,2");
    assert_eq!(l.lambda_upper(0).unwrap(), vec![3, 2, 2, 2, 1]);
    assert_eq!(l.lambda_upper(2).unwrap(), vec![3, 3, 2, 2, 1, 1]);
    assert_eq!(mp("0,0|2,1").lambda_upper(0).unwrap(), vec![2, 1]);
    assert!(l.lambda_upper(5).is_err());
}

#[test]
fn lambda_upper_matches_filled_circles() {
    for m in 0..=3 {
        for d in 0..=4 {
            for l in enumerate_mpartitions(m, d) {
                let diag = diagram_of(&l);
                for i in 0..=m {
                    let rows: Vec<u32> = diag
                        .rows
                        .iter()
                        .map(|r| r.len + u32::from(r.circle.is_some_and(|c| c <= i)))
                        .collect();
                    assert_eq!(sort_partition(&rows), l.lambda_upper(i).unwrap());
                }
            }
        }
    }
}

#[test]
fn dominance_examples() {
    let (o, l) = (mp("0,1|"), mp("1,0|"));
    assert!(dominance_leq(&o, &l).unwrap());
    assert!(!dominance_leq(&l, &o).unwrap());
    assert!(dominance_leq(&l, &l).unwrap());
    assert!(dominance_leq(&mp("0,0|2"), &mp("2,0|")).unwrap());
    assert!(dominance_leq(&mp("1|"), &mp("|1")).is_err());
}

#[test]
fn dominance_is_partial_order() {
    for m in 0..=2 {
        for d in 0..=5 {
            let all = enumerate_mpartitions(m, d);
            for x in &all {
                for y in &all {
                    let (xy, yx) = (dominance_leq(x, y).unwrap(), dominance_leq(y, x).unwrap());
                    if xy && yx {
                        assert_eq!(x, y);
                    }
                }
            }
            if d <= 3 {
                for x in &all {
                    for y in &all {
                        for z in &all {
                            if dominance_leq(x, y).unwrap() && dominance_leq(y, z).unwrap() {
                                assert!(dominance_leq(x, z).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_mpartitions(0, 2), vec![mp("|2"), mp("|1,1")]);
    assert_eq!(enumerate_mpartitions(1, 1), vec![mp("1|"), mp("0|1")]);
    assert_eq!(enumerate_mpartitions(2, 0), vec![mp("0,0|")]);
    assert_eq!(enumerate_mpartitions(2, 3).len(), 14);
}

#[test]
fn enumeration_refines_dominance() {
    for m in 0..=2 {
        for d in 0..=5 {
            let all = enumerate_mpartitions(m, d);
            let uniq: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(uniq.len(), all.len());
            for (i, x) in all.iter().enumerate() {
                for y in &all[..i] {
                    assert!(!dominance_leq(y, x).unwrap(), "{y} precedes {x} but is dominated by it");
                }
            }
        }
    }
}

/// Oracle for the Bruhat order on a fixed orbit: the transitive closure of
/// moving a larger entry to the right past a smaller one.
fn bruhat_by_swaps(eta: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![eta.to_vec()];
    while let Some(v) = stack.pop() {
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    let mut w = v.clone();
                    w.swap(i, j);
                    if seen.insert(w.clone()) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    seen
}

#[test]
fn bruhat_examples() {
    assert!(bruhat_less(&[1, 1], &[2, 0]));
    assert!(bruhat_less(&[0, 1], &[1, 0]));
    assert!(!bruhat_less(&[1, 0], &[0, 1]));
    assert!(!bruhat_less(&[2, 0, 1], &[2, 0, 1]));
}

#[test]
fn bruhat_matches_swap_oracle() {
    for n in 1..=4 {
        for d in 0..=4 {
            let all = compositions(n, d);
            for eta in &all {
                let below = bruhat_by_swaps(eta);
                for nu in &all {
                    if sort_partition(nu) == sort_partition(eta) {
                        assert_eq!(bruhat_less(nu, eta), below.contains(nu), "{nu:?} vs {eta:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn arm_leg_grid() {
    let l = mp("2,0,0,2|4,1,1");
    let expected: [&[(u32, u32)]; 5] = [
        &[(3, 4), (2, 2), (1, 0), (0, 0)],
        &[(2, 3), (1, 1)],
        &[(2, 4), (1, 0)],
        &[(0, 1)],
        &[(0, 0)],
    ];
    for (r, row) in expected.iter().enumerate() {
        for (c, al) in row.iter().enumerate() {
            assert_eq!(arm_leg(&l, (r + 1, c + 1)).unwrap(), *al, "cell ({},{})", r + 1, c + 1);
        }
    }
    assert!(arm_leg(&l, (6, 1)).is_err());
    assert_eq!(arm_leg(&mp("|1"), (1, 1)).unwrap(), (0, 0));
}

fn one_minus(i: u32, j: u32) -> QTPoly {
    &QTPoly::one() - &QTPoly::monomial(BigInt::from(1), i, j)
}

#[test]
fn hook_product_golden() {
    let factors = [(0, 1), (1, 1), (2, 3), (3, 5), (1, 2), (2, 4), (1, 1), (2, 5), (0, 2), (0, 1)];
    let expected = factors.iter().fold(QTPoly::one(), |acc, &(i, j)| &acc * &one_minus(i, j));
    assert_eq!(c_hook(&mp("2,0,0,2|4,1,1")), expected);
    assert_eq!(c_hook(&mp("|1")), one_minus(0, 1));
    // A single circled square has arm 1 by the circle rule.
    assert_eq!(c_hook(&mp("1|")), one_minus(1, 1));
}

#[test]
fn hook_product_ignores_trailing_zero_circle() {
    for m in 0..=2 {
        for d in 0..=5 {
            for l in enumerate_mpartitions(m, d) {
                assert_eq!(c_hook(&l), c_hook(&l.with_zero()), "{l}");
            }
        }
    }
}

#[test]
fn u_norm_examples() {
    assert_eq!(u_norm(&mp("|"), 1).unwrap(), TLaurent::one());
    assert_eq!(u_norm(&mp("3|"), 2).unwrap(), TLaurent::one());
    assert_eq!(u_norm(&mp("|1"), 2).unwrap(), TLaurent::t_pow(1));
    assert!(u_norm(&mp("1,1|2"), 2).is_err());
}

#[test]
fn inversion_counts() {
    assert_eq!(inv_count(&[2, 3, 2, 2]), 1);
    assert_eq!(inv_count(&[3, 2, 2, 0]), 0);
    assert_eq!(inv_count(&[0, 1, 2]), 3);
}

#[test]
fn syt_counts() {
    assert_eq!(count_syt(&[2, 1]), BigInt::from(2));
    assert_eq!(count_syt(&[3, 2, 1]), BigInt::from(16));
    assert_eq!(count_syt(&[]), BigInt::from(1));
}

#[test]
fn parse_and_print() {
    let l = mp("2,0,2,1|3,2");
    assert_eq!(l.to_string(), "2,0,2,1|3,2");
    assert_eq!(mp("|").m(), 0);
    assert!("1,x|2".parse::<MPartition>().is_err());
    assert!("1|1,2".parse::<MPartition>().is_err());
}
