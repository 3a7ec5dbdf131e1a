//! Integer partitions, Young diagrams and the scalars attached to them.
//!
//! Diagrams use the matrix convention: cell `(i, j)` belongs to `D(λ)` iff
//! `j < λ[i]`, rows counted top-down from 0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("malformed partition string {0:?}")]
    Parse(String),
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cell ({row}, {col}) is outside the diagram of {partition}")]
    CellOutside {
        row: usize,
        col: usize,
        partition: Partition,
    },
}

/// A weakly decreasing sequence of positive integers.
///
/// Ordered by weight first, then lexicographically on the parts. Within one
/// weight this puts `(1,1,1)` before `(2,1)` before `(3)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

/// A cell of a Young diagram, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// The partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::NotDecreasing(parts))
        }
    }

    /// Sorts and drops zeros, so any multiset of parts is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(r)` for `r ≥ 1`, the empty partition for `r = 0`.
    pub fn single(r: usize) -> Self {
        if r == 0 {
            Partition::empty()
        } else {
            Partition(vec![r])
        }
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(n - s, 1^s)`; requires `s < n`.
    pub fn hook(n: usize, s: usize) -> Self {
        assert!(s < n, "hook ({n}-{s}, 1^{s}) is not a partition");
        let mut parts = vec![n - s];
        parts.extend(std::iter::repeat(1).take(s));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cohomological degree of `p_λ`: `|λ| - l(λ)`.
    pub fn degree(&self) -> usize {
        self.weight() - self.len()
    }

    /// Number of parts equal to `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.0.iter().filter(|&&p| p == r).count()
    }

    /// `(r, α_r)` pairs for each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((r, m)) if *r == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Union of the parts of both partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    parts.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    parts.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition(parts)
    }

    /// Removes one part equal to `r`, if present.
    pub fn remove_part(&self, r: usize) -> Option<Partition> {
        let idx = self.0.iter().position(|&p| p == r)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Partition(parts))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.0.get(cell.row).is_some_and(|&len| cell.col < len)
    }

    /// Cells of `D(λ)` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| Cell::new(i, j)))
            .collect()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&len| len > j).count())
            .collect();
        Partition(parts)
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize, PartitionError> {
        if !self.contains(cell) {
            return Err(PartitionError::CellOutside {
                row: cell.row,
                col: cell.col,
                partition: self.clone(),
            });
        }
        let arm = self.0[cell.row] - cell.col - 1;
        let leg = self.0[cell.row + 1..]
            .iter()
            .take_while(|&&len| len > cell.col)
            .count();
        Ok(arm + leg + 1)
    }

    /// All hook lengths in row-major cell order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|c| (self.0[c.row] - c.col) + (conj.0[c.col] - c.row) - 1)
            .collect()
    }

    /// `h(λ)`, the product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        self.hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    /// `z_λ = ∏ α_r! r^{α_r}`, the centralizer order of a permutation of cycle type λ.
    pub fn z_factor(&self) -> BigUint {
        let mut z = BigUint::one();
        for (r, m) in self.multiplicities() {
            for i in 1..=m {
                z *= i * r;
            }
        }
        z
    }

    /// The leg length `s` when λ is a hook `(n - s, 1^s)`; the empty partition counts as `s = 0`.
    pub fn hook_leg(&self) -> Option<usize> {
        if self.0.iter().skip(1).all(|&p| p == 1) {
            Some(self.len().saturating_sub(1))
        } else {
            None
        }
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `"4,3,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Independent count: all weakly decreasing sequences summing to n, via
    // filtering every composition of n.
    fn brute_force_count(n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (0u32..1 << (n - 1))
            .filter(|mask| {
                let mut parts = Vec::new();
                let mut run = 1;
                for bit in 0..n - 1 {
                    if mask & (1 << bit) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                parts.windows(2).all(|w| w[0] >= w[1])
            })
            .count()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=12 {
            let list = partitions_of(n);
            assert_eq!(list.len(), brute_force_count(n), "n = {n}");
            let mut dedup = list.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), list.len());
            assert!(list.iter().all(|l| l.weight() == n));
            // reverse-lex: strictly decreasing in the lexicographic order on parts
            assert!(list.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn cells_in_row_major_order() {
        assert!(Partition::empty().cells().is_empty());
        assert_eq!(
            p(&[2, 1]).cells(),
            vec![Cell::new(0, 0), Cell::new(0, 1), Cell::new(1, 0)]
        );
        assert_eq!(p(&[4, 3, 1]).cells().len(), 8);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[4, 3, 1]).hook_length(Cell::new(0, 1)).unwrap(), 4);
        assert_eq!(p(&[1]).hook_length(Cell::new(0, 0)).unwrap(), 1);
        assert_eq!(p(&[2, 1]).hook_length(Cell::new(0, 0)).unwrap(), 3);
        assert!(matches!(
            p(&[2, 1]).hook_length(Cell::new(1, 1)),
            Err(PartitionError::CellOutside { .. })
        ));
        let lam = p(&[4, 3, 1]);
        let direct: Vec<usize> = lam
            .cells()
            .into_iter()
            .map(|c| lam.hook_length(c).unwrap())
            .collect();
        assert_eq!(direct, vec![6, 4, 3, 1, 4, 2, 1, 1]);
        assert_eq!(lam.hook_lengths(), direct);
    }

    #[test]
    fn hook_products() {
        assert_eq!(Partition::empty().hook_product(), BigUint::one());
        assert_eq!(p(&[1]).hook_product(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).hook_product(), BigUint::from(3u32));
        assert_eq!(p(&[4, 3, 1]).hook_product(), BigUint::from(576u32));
    }

    #[test]
    fn z_factors() {
        let mut fact = BigUint::one();
        for n in 1..=10usize {
            fact *= n;
            assert_eq!(Partition::ones(n).z_factor(), fact);
            assert_eq!(Partition::single(n).z_factor(), BigUint::from(n));
        }
        assert_eq!(p(&[2, 1]).z_factor(), BigUint::from(2u32));
        assert_eq!(Partition::empty().z_factor(), BigUint::one());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        for n in 0..=10 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.hook_product(), lam.conjugate().hook_product());
            }
        }
    }

    #[test]
    fn inverse_square_hooks_sum_to_inverse_factorial() {
        let mut fact = BigUint::one();
        for n in 0..=10usize {
            if n > 0 {
                fact *= n;
            }
            let total = partitions_of(n).iter().fold(BigRational::zero(), |acc, lam| {
                let h = lam.hook_product();
                acc + BigRational::new(1.into(), (&h * &h).into())
            });
            assert_eq!(total, BigRational::new(1.into(), fact.clone().into()), "n = {n}");
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), p(&[4, 3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn merge_and_remove() {
        assert_eq!(p(&[3, 1]).merge(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[2, 2, 1]).remove_part(2), Some(p(&[2, 1])));
        assert_eq!(p(&[2, 2, 1]).remove_part(3), None);
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![(2, 2), (1, 1)]);
    }

    #[test]
    fn ordering_weight_then_lex() {
        let mut v = vec![p(&[3]), p(&[1, 1, 1]), p(&[2]), p(&[2, 1]), Partition::empty()];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), p(&[2]), p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]);
    }

    #[test]
    fn hook_shapes() {
        assert_eq!(p(&[3, 1, 1]).hook_leg(), Some(2));
        assert_eq!(p(&[3]).hook_leg(), Some(0));
        assert_eq!(p(&[2, 2]).hook_leg(), None);
        assert_eq!(Partition::hook(5, 2), p(&[3, 1, 1]));
    }
}
