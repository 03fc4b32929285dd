use super::{MPartition, Partition};

/// Partitions of `d` in decreasing lexicographic order.
pub fn partitions(d: u32) -> Vec<Partition> {
    partitions_max_len(d, usize::MAX)
}

/// Partitions of `d` with at most `max_len` parts, decreasing lexicographic order.
pub fn partitions_max_len(d: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, max_part: u32, len_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            rec(rem - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_len, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `k` with `m` parts, decreasing lexicographic order.
pub fn compositions(m: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if cur.len() + 1 == m {
            cur.push(k);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=k).rev() {
            cur.push(x);
            rec(m, k - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, k, &mut Vec::new(), &mut out);
    out
}

/// All m-partitions of degree `d`, largest first in a total order that
/// refines dominance (lexicographic on `(Λ^{(0)}, …, Λ^{(m)})`).
pub fn enumerate_mpartitions(m: usize, d: u32) -> Vec<MPartition> {
    let mut out = Vec::new();
    for k in 0..=d {
        for a in compositions(m, k) {
            for lam in partitions(d - k) {
                out.push(MPartition { a: a.clone(), lam });
            }
        }
    }
    let key = |l: &MPartition| -> Vec<Vec<u32>> {
        (0..=l.m()).map(|i| l.lambda_upper(i).expect("i <= m")).collect()
    };
    let mut keyed: Vec<(Vec<Vec<u32>>, MPartition)> = out.into_iter().map(|l| (key(&l), l)).collect();
    keyed.sort_by(|x, y| y.0.cmp(&x.0));
    keyed.into_iter().map(|(_, l)| l).collect()
}
