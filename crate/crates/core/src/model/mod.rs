//! Finite algebras stored as flat operation tables.
//!
//! The carrier of every model is `{0, .., k-1}`. The table of an `m`-ary
//! symbol has length `k^m` and lists results in lexicographic argument order
//! with the first argument most significant.

mod format;

pub use format::{parse_algebra, serialize_algebra};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut sig = Signature::default();
        for (name, arity) in symbols {
            sig.push(name, arity)?;
        }
        Ok(sig)
    }

    pub fn push(&mut self, name: impl Into<String>, arity: usize) -> Result<usize> {
        let name = name.into();
        if self.index_of(&name).is_some() {
            return Err(Error::DuplicateSymbol(name));
        }
        self.symbols.push(Symbol { name, arity });
        Ok(self.symbols.len() - 1)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn get(&self, name: &str) -> Option<&Symbol> {
        self.symbols.iter().find(|s| s.name == name)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// `k^m`, the number of argument tuples of an `m`-ary operation.
pub fn table_len(size: usize, arity: usize) -> usize {
    size.pow(arity as u32)
}

/// Lexicographic rank of `tuple` in `{0..k-1}^len`, first entry most significant.
pub fn tuple_index(size: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * size + x)
}

/// Inverse of [`tuple_index`].
pub fn tuple_at(size: usize, len: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % size;
        index /= size;
    }
    out
}

/// Lexicographic odometer over `{0..k-1}^len`.
///
/// Not an `Iterator` because it lends its internal buffer.
#[derive(Debug, Clone)]
pub struct Tuples {
    size: usize,
    digits: Vec<usize>,
    started: bool,
}

impl Tuples {
    pub fn new(size: usize, len: usize) -> Self {
        Tuples {
            size,
            digits: vec![0; len],
            started: false,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            return if self.size == 0 && !self.digits.is_empty() {
                None
            } else {
                Some(&self.digits)
            };
        }
        for pos in (0..self.digits.len()).rev() {
            self.digits[pos] += 1;
            if self.digits[pos] < self.size {
                return Some(&self.digits);
            }
            self.digits[pos] = 0;
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteModel {
    size: usize,
    signature: Signature,
    tables: Vec<Vec<usize>>,
}

impl FiniteModel {
    pub fn new(size: usize, signature: Signature, tables: Vec<Vec<usize>>) -> Result<Self> {
        if size == 0 {
            return Err(Error::Invalid("carrier must be non-empty".into()));
        }
        if tables.len() != signature.len() {
            return Err(Error::Invalid(format!(
                "{} tables given for {} symbols",
                tables.len(),
                signature.len()
            )));
        }
        for (sym, table) in signature.symbols().iter().zip(&tables) {
            let expected = table_len(size, sym.arity);
            if table.len() != expected {
                return Err(Error::TableLength {
                    symbol: sym.name.clone(),
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= size) {
                return Err(Error::OutOfRange { value, size });
            }
        }
        Ok(FiniteModel {
            size,
            signature,
            tables,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn table(&self, symbol: usize) -> &[usize] {
        &self.tables[symbol]
    }

    pub fn table_by_name(&self, name: &str) -> Option<&[usize]> {
        self.signature.index_of(name).map(|i| self.table(i))
    }

    /// Looks up `sym(args)`.
    pub fn eval_op(&self, sym: &str, args: &[usize]) -> Result<usize> {
        let index = self
            .signature
            .index_of(sym)
            .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))?;
        let arity = self.signature.symbols()[index].arity;
        if args.len() != arity {
            return Err(Error::ArityMismatch {
                symbol: sym.to_string(),
                expected: arity,
                found: args.len(),
            });
        }
        if let Some(&value) = args.iter().find(|&&a| a >= self.size) {
            return Err(Error::OutOfRange {
                value,
                size: self.size,
            });
        }
        Ok(self.tables[index][tuple_index(self.size, args)])
    }
}

/// Name of the `i`-th binary operation (0-based) in a frame of width `n`.
pub fn alpha_name(n: usize, i: usize) -> String {
    if n == 1 {
        "alpha".to_string()
    } else {
        format!("alpha{}", i + 1)
    }
}

/// Name of the `i`-th constant (0-based) in a frame of width `n`.
pub fn unit_name(n: usize, i: usize) -> String {
    if n == 1 {
        "e".to_string()
    } else {
        format!("e{}", i + 1)
    }
}

/// A finite model with designated operations `theta` (arity n+1),
/// `alpha_1..alpha_n` (binary) and constants `e_1..e_n`.
///
/// Only the shape is validated here; whether the protomodular identities hold
/// is a question for [`crate::protomod`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProtomodularFrame {
    model: FiniteModel,
    n: usize,
    theta_sym: usize,
    alpha_syms: Vec<usize>,
    unit_syms: Vec<usize>,
}

impl ProtomodularFrame {
    /// Builds a frame over the standard signature (`theta`, `alpha`/`alphaI`,
    /// `e`/`eI`).
    pub fn new(
        n: usize,
        size: usize,
        theta: Vec<usize>,
        alphas: Vec<Vec<usize>>,
        units: Vec<usize>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be positive".into()));
        }
        if alphas.len() != n || units.len() != n {
            return Err(Error::Invalid(format!(
                "expected {n} alpha tables and {n} constants, got {} and {}",
                alphas.len(),
                units.len()
            )));
        }
        let mut signature = Signature::default();
        let mut tables = Vec::with_capacity(2 * n + 1);
        signature.push("theta", n + 1)?;
        tables.push(theta);
        for (i, alpha) in alphas.into_iter().enumerate() {
            signature.push(alpha_name(n, i), 2)?;
            tables.push(alpha);
        }
        for (i, e) in units.into_iter().enumerate() {
            signature.push(unit_name(n, i), 0)?;
            tables.push(vec![e]);
        }
        let model = FiniteModel::new(size, signature, tables)?;
        Ok(ProtomodularFrame {
            model,
            n,
            theta_sym: 0,
            alpha_syms: (1..=n).collect(),
            unit_syms: (n + 1..=2 * n).collect(),
        })
    }

    /// Designates symbols of an arbitrary model as the frame operations.
    pub fn from_model(
        model: FiniteModel,
        theta: &str,
        alphas: &[&str],
        units: &[&str],
    ) -> Result<Self> {
        let n = alphas.len();
        if n == 0 || units.len() != n {
            return Err(Error::Invalid(
                "need n >= 1 alpha symbols and as many constants".into(),
            ));
        }
        let lookup = |name: &str, arity: usize| -> Result<usize> {
            let index = model
                .signature()
                .index_of(name)
                .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
            let found = model.signature().symbols()[index].arity;
            if found != arity {
                return Err(Error::ArityMismatch {
                    symbol: name.to_string(),
                    expected: arity,
                    found,
                });
            }
            Ok(index)
        };
        let theta_sym = lookup(theta, n + 1)?;
        let alpha_syms = alphas
            .iter()
            .map(|a| lookup(a, 2))
            .collect::<Result<Vec<_>>>()?;
        let unit_syms = units
            .iter()
            .map(|e| lookup(e, 0))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProtomodularFrame {
            model,
            n,
            theta_sym,
            alpha_syms,
            unit_syms,
        })
    }

    pub fn model(&self) -> &FiniteModel {
        &self.model
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.model.size
    }

    pub fn theta_table(&self) -> &[usize] {
        self.model.table(self.theta_sym)
    }

    /// Table of `alpha_{i+1}`.
    pub fn alpha_table(&self, i: usize) -> &[usize] {
        self.model.table(self.alpha_syms[i])
    }

    /// Value of `e_{i+1}`.
    pub fn unit(&self, i: usize) -> usize {
        self.model.table(self.unit_syms[i])[0]
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.unit(i)).collect()
    }

    /// `theta(tuple, b)`; `tuple` must have length `n`.
    #[inline]
    pub fn theta(&self, tuple: &[usize], b: usize) -> usize {
        debug_assert_eq!(tuple.len(), self.n);
        let k = self.model.size;
        self.theta_table()[tuple_index(k, tuple) * k + b]
    }

    /// `theta` applied to the tuple with lexicographic rank `row`.
    #[inline]
    pub fn theta_row(&self, row: usize, b: usize) -> usize {
        self.theta_table()[row * self.model.size + b]
    }

    /// `alpha_{i+1}(a, b)`.
    #[inline]
    pub fn alpha(&self, i: usize, a: usize, b: usize) -> usize {
        self.alpha_table(i)[a * self.model.size + b]
    }

    /// `(alpha_1(a, b), .., alpha_n(a, b))`.
    pub fn alphas(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n).map(|i| self.alpha(i, a, b)).collect()
    }

    /// Number of rows of the theta table, `k^n`.
    pub fn tuple_count(&self) -> usize {
        table_len(self.model.size, self.n)
    }

    /// Copy of this frame with the constants replaced.
    pub fn with_units(&self, units: Vec<usize>) -> Result<Self> {
        let alphas = (0..self.n).map(|i| self.alpha_table(i).to_vec()).collect();
        ProtomodularFrame::new(
            self.n,
            self.size(),
            self.theta_table().to_vec(),
            alphas,
            units,
        )
    }

    /// The one-element frame of width `n`.
    pub fn trivial(n: usize) -> Self {
        ProtomodularFrame::new(n, 1, vec![0], vec![vec![0]; n], vec![0; n])
            .expect("singleton frame is well formed")
    }
}
