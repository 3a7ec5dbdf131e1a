//! Irreducible characters of symmetric groups and the Frobenius dictionary
//! between class functions on `Sₙ` and `Λⁿ`.
//!
//! Character values come from the Murnaghan–Nakayama rule, evaluated on
//! beta-sets: removing a border strip of size `r` from `λ` is moving one bead
//! of the beta-set down by `r` onto a free position, with sign `(-1)^{height}`
//! where the height counts the beads jumped over. Whole tables are built once
//! per `n` and shared through an append-only cache.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use thiserror::Error;

use crate::number::{self, Rational};
use crate::partitions::{partitions_of, Partition};
use crate::symfun::SymFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("weight mismatch: |{lambda}| = {lambda_weight} but |{mu}| = {mu_weight}")]
    WeightMismatch {
        lambda: Partition,
        mu: Partition,
        lambda_weight: usize,
        mu_weight: usize,
    },
    #[error("class function on S_{n} has a key {key} of the wrong weight")]
    WrongClass { n: usize, key: Partition },
}

/// The full table `χ^λ_μ` for one `n`, rows and columns in the order of
/// [`partitions_of`].
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| murnaghan_nakayama(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `χ^λ_μ`; both must be partitions of `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    /// The row of `χ^λ`, indexed like [`Self::partitions`].
    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The character table of `Sₙ`, built on first use and cached.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(table) = table_cache().read().expect("cache poisoned").get(&n) {
        return Arc::clone(table);
    }
    // Built outside the lock; a concurrent builder produces the same table and
    // whichever lands first is kept.
    let built = Arc::new(CharacterTable::build(n));
    let mut cache = table_cache().write().expect("cache poisoned");
    Arc::clone(cache.entry(n).or_insert(built))
}

/// `χ^λ_μ` via the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, CharacterError> {
    let (lw, mw) = (lambda.weight(), mu.weight());
    if lw != mw {
        return Err(CharacterError::WeightMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
            lambda_weight: lw,
            mu_weight: mw,
        });
    }
    Ok(character_table(lw).value(lambda, mu))
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

// Strips the largest remaining cycle length first.
fn murnaghan_nakayama(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest_mu)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    // beta-set, strictly decreasing
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (len - 1 - i))
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&part| part > 0)
            .collect();
        let sub = murnaghan_nakayama(&smaller, rest_mu, memo);
        total += if height % 2 == 0 { sub } else { -sub };
    }
    memo.insert(key, total);
    total
}

/// `χ^λ` on an `n`-cycle: `(-1)^s` for the hook `(n - s, 1^s)`, zero otherwise.
pub fn char_on_full_cycle(lambda: &Partition) -> i64 {
    match lambda.hook_leg() {
        Some(s) if s % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    }
}

/// A class function on `Sₙ`, stored as its values on conjugacy classes.
/// Classes without an entry read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn new(n: usize, values: BTreeMap<Partition, Rational>) -> Result<Self, CharacterError> {
        if let Some(key) = values.keys().find(|k| k.weight() != n) {
            return Err(CharacterError::WrongClass {
                n,
                key: key.clone(),
            });
        }
        Ok(ClassFunction { n, values })
    }

    /// The indicator `χ_μ` of one class.
    pub fn indicator(mu: &Partition) -> Self {
        let mut values = BTreeMap::new();
        values.insert(mu.clone(), Rational::from_integer(1.into()));
        ClassFunction {
            n: mu.weight(),
            values,
        }
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let n = lambda.weight();
        let table = character_table(n);
        let values = table
            .partitions()
            .iter()
            .zip(table.row(lambda))
            .map(|(mu, &v)| (mu.clone(), number::int(v)))
            .collect();
        ClassFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> Rational {
        self.values.get(mu).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `Φ(f) = Σ_μ f(μ) z_μ⁻¹ p_μ`.
pub fn frobenius_image(f: &ClassFunction) -> SymFunc {
    SymFunc::from_terms(f.values.iter().map(|(mu, v)| {
        let z = number::from_biguint(&mu.z_factor());
        (mu.clone(), v / z)
    }))
}

/// The Schur function `s_λ = Σ_μ z_μ⁻¹ χ^λ_μ p_μ`.
pub fn schur_in_p(lambda: &Partition) -> SymFunc {
    frobenius_image(&ClassFunction::irreducible(lambda))
}
