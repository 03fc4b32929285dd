#![allow(non_snake_case)]

use crate::combinatorics::{sort_partition, MPartition};
use crate::error::{contract, domain, Result};

use super::shape::{Alphabet, SkewShape, SkewTableau};

/// A letter, how many times it must appear, and the number of columns it may use.
struct Budget {
    letter: i32,
    count: u32,
    max_col: u32,
}

fn check_pair(l: &MPartition, o: &MPartition) -> Result<()> {
    if l.m() != o.m() || l.degree() != o.degree() {
        return domain(format!("{l} and {o} differ in m or degree"));
    }
    Ok(())
}

fn outer_of(l: &MPartition) -> Vec<u32> {
    let mut v = l.a.clone();
    v.extend(&l.lam);
    sort_partition(&v)
}

/// Column-wise backtracking over fillings of `shape` using each budgeted
/// letter exactly `count` times, only in its first `max_col` columns.
fn fill(shape: &SkewShape, alphabet: Alphabet, mut letters: Vec<Budget>) -> Vec<SkewTableau> {
    letters.sort_by_key(|b| b.letter);
    let total: u32 = letters.iter().map(|b| b.count).sum();
    if total != shape.size() {
        return Vec::new();
    }
    let width = shape.width();
    if letters.iter().any(|b| b.count > b.max_col.min(width)) {
        return Vec::new();
    }
    let mut grid: Vec<Vec<Option<i32>>> = shape.outer.iter().map(|&n| vec![None; n as usize]).collect();
    let mut remaining: Vec<u32> = letters.iter().map(|b| b.count).collect();
    let mut out = Vec::new();
    rec(shape, &letters, 0, width, &mut grid, &mut remaining, &mut out);
    out.into_iter()
        .map(|g| SkewTableau {
            shape: shape.clone(),
            alphabet,
            rows: g
                .iter()
                .enumerate()
                .map(|(r, row)| row[shape.inner_len(r) as usize..].iter().map(|x| x.expect("filled")).collect())
                .collect(),
        })
        .collect()
}

fn rec(
    shape: &SkewShape,
    letters: &[Budget],
    col: u32,
    width: u32,
    grid: &mut Vec<Vec<Option<i32>>>,
    remaining: &mut Vec<u32>,
    out: &mut Vec<Vec<Vec<Option<i32>>>>,
) {
    if col == width {
        if remaining.iter().all(|&r| r == 0) {
            out.push(grid.clone());
        }
        return;
    }
    let rows = shape.column_rows(col);
    let allowed: Vec<usize> = (0..letters.len()).filter(|&k| remaining[k] > 0 && col < letters[k].max_col).collect();
    if allowed.len() < rows.len() {
        return;
    }
    let mut choice = Vec::with_capacity(rows.len());
    choose(shape, letters, col, width, &rows, &allowed, 0, &mut choice, grid, remaining, out);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    shape: &SkewShape,
    letters: &[Budget],
    col: u32,
    width: u32,
    rows: &[usize],
    allowed: &[usize],
    start: usize,
    choice: &mut Vec<usize>,
    grid: &mut Vec<Vec<Option<i32>>>,
    remaining: &mut Vec<u32>,
    out: &mut Vec<Vec<Vec<Option<i32>>>>,
) {
    let k = choice.len();
    if k == rows.len() {
        // Every letter must still fit in the columns to the right.
        let fits = (0..letters.len()).all(|j| {
            let cols_left = letters[j].max_col.min(width).saturating_sub(col + 1);
            remaining[j] <= cols_left
        });
        if fits {
            rec(shape, letters, col + 1, width, grid, remaining, out);
        }
        return;
    }
    let r = rows[k];
    for idx in start..allowed.len() {
        if allowed.len() - idx < rows.len() - k {
            break;
        }
        let j = allowed[idx];
        let x = letters[j].letter;
        if col > 0 && shape.contains(r, col - 1) && grid[r][(col - 1) as usize].is_some_and(|left| left > x) {
            continue;
        }
        grid[r][col as usize] = Some(x);
        remaining[j] -= 1;
        choice.push(j);
        choose(shape, letters, col, width, rows, allowed, idx + 1, choice, grid, remaining, out);
        choice.pop();
        remaining[j] += 1;
        grid[r][col as usize] = None;
    }
}

/// `S_{ΛΩ}`: skew tableaux of shape `(a ∪ λ)/μ` in which the letter `i`
/// appears `b_i` times, always within the first `a_i` columns.
pub fn enumerate_S(l: &MPartition, o: &MPartition) -> Result<Vec<SkewTableau>> {
    check_pair(l, o)?;
    let Ok(shape) = SkewShape::new(outer_of(l), o.lam.clone()) else {
        return Ok(Vec::new());
    };
    let letters = (0..l.m())
        .map(|i| Budget { letter: i as i32 + 1, count: o.a[i], max_col: l.a[i] })
        .collect();
    Ok(fill(&shape, Alphabet::Plain, letters))
}

/// `S̄_{ΛΩ}`: skew tableaux of shape `μ/λ` in which `ī` appears `a_i - b_i`
/// times, always within the first `a_i` columns.
pub fn enumerate_Sbar(l: &MPartition, o: &MPartition) -> Result<Vec<SkewTableau>> {
    check_pair(l, o)?;
    if (0..l.m()).any(|i| o.a[i] > l.a[i]) {
        return Ok(Vec::new());
    }
    let Ok(shape) = SkewShape::new(o.lam.clone(), l.lam.clone()) else {
        return Ok(Vec::new());
    };
    let letters = (0..l.m())
        .map(|i| Budget { letter: -(i as i32 + 1), count: l.a[i] - o.a[i], max_col: l.a[i] })
        .collect();
    Ok(fill(&shape, Alphabet::Barred, letters))
}

/// The bijection `𝔟` between `S̄_{ΛΩ}` and `S_{ΛΩ}` (either direction): for
/// `c ≤ a_i`, the output has `i` (resp. `ī`) in column `c` iff the input has no
/// `ī` (resp. `i`) there.
pub fn bij_b(t: &SkewTableau, l: &MPartition, o: &MPartition) -> Result<SkewTableau> {
    check_pair(l, o)?;
    if !t.is_valid() {
        return contract("input is not a skew tableau");
    }
    let (src_shape, dst_shape, dst_alpha, sign) = match t.alphabet {
        Alphabet::Barred => (
            SkewShape::new(o.lam.clone(), l.lam.clone())?,
            SkewShape::new(outer_of(l), o.lam.clone())?,
            Alphabet::Plain,
            1,
        ),
        Alphabet::Plain => (
            SkewShape::new(outer_of(l), o.lam.clone())?,
            SkewShape::new(o.lam.clone(), l.lam.clone())?,
            Alphabet::Barred,
            -1,
        ),
    };
    if t.shape != src_shape {
        return contract("tableau shape does not match the pair of m-partitions");
    }
    let amax = l.a.iter().copied().max().unwrap_or(0);
    let width = amax.max(dst_shape.width()).max(src_shape.width());
    let mut rows: Vec<Vec<i32>> =
        (0..dst_shape.outer.len()).map(|r| Vec::with_capacity((dst_shape.outer_len(r) - dst_shape.inner_len(r)) as usize)).collect();
    let mut cols: Vec<Vec<(usize, i32)>> = Vec::new();
    for c in 0..width {
        let present = t.column(c);
        let mut letters: Vec<i32> = (0..l.m())
            .filter(|&i| c < l.a[i] && !present.contains(&(-sign * (i as i32 + 1))))
            .map(|i| sign * (i as i32 + 1))
            .collect();
        letters.sort();
        let cells = dst_shape.column_rows(c);
        if cells.len() != letters.len() {
            return contract(format!("column {} cannot hold the complementary letters", c + 1));
        }
        cols.push(cells.into_iter().zip(letters).collect());
    }
    for col in cols {
        for (r, x) in col {
            rows[r].push(x);
        }
    }
    let out = SkewTableau { shape: dst_shape, alphabet: dst_alpha, rows };
    if !out.is_valid() {
        return contract("image under 𝔟 is not a skew tableau");
    }
    Ok(out)
}

/// Semistandard tableaux of skew shape `shape` with content `content`
/// (letter `i` used `content[i-1]` times).
pub fn enumerate_ssyt(shape: &SkewShape, content: &[u32]) -> Vec<SkewTableau> {
    let width = shape.width();
    let letters = content
        .iter()
        .enumerate()
        .map(|(i, &c)| Budget { letter: i as i32 + 1, count: c, max_col: width })
        .collect();
    fill(shape, Alphabet::Plain, letters)
}
