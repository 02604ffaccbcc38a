//! Finite semigroups stored as dense Cayley tables.
//!
//! Elements are the indices `0..n`. Labels, when present, are carried along
//! for presentation and the text format but never consulted by algorithms.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates closure and associativity (direct O(n³) scan).
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Empty);
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != order {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(Error::NotClosed {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            table.extend(entries);
        }
        if let Some(labels) = &labels {
            check_labels(labels, order)?;
        }
        let s = FiniteSemigroup {
            order,
            table,
            labels,
        };
        if let Some((a, b, c)) = s.associativity_violation() {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(s)
    }

    /// Builds from a product function; still validated.
    pub fn from_fn(order: usize, product: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..order)
            .map(|a| (0..order).map(|b| product(a, b)).collect())
            .collect();
        Self::from_table(rows, None)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.order)?;
        self.labels = Some(labels);
        Ok(self)
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    #[inline]
    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    /// The transposed table. Labels are kept.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            labels: self.labels.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_band(&self) -> bool {
        self.elements().all(|e| self.is_idempotent(e))
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    /// Some `x` with `a x a = a`, least index first.
    pub fn inner_inverse(&self, a: usize) -> Option<usize> {
        self.elements().find(|&x| self.mul(self.mul(a, x), a) == a)
    }

    pub fn regularity_witness(&self) -> Option<usize> {
        self.elements().find(|&a| self.inner_inverse(a).is_none())
    }

    pub fn is_regular(&self) -> bool {
        self.regularity_witness().is_none()
    }

    pub fn is_inverse(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        let e = self.idempotents();
        e.iter()
            .all(|&x| e.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// First pair `(e, x)` with `e` idempotent and `ex != xe`.
    pub fn centrality_witness(&self) -> Option<(usize, usize)> {
        self.idempotents()
            .into_iter()
            .flat_map(|e| self.elements().map(move |x| (e, x)))
            .find(|&(e, x)| self.mul(e, x) != self.mul(x, e))
    }

    /// Regular with central idempotents.
    pub fn is_clifford(&self) -> bool {
        self.is_regular() && self.centrality_witness().is_none()
    }

    /// The identity of a group: the unique idempotent, provided every element
    /// is invertible with respect to it.
    pub fn group_identity(&self) -> Option<usize> {
        let idem = self.idempotents();
        if idem.len() != 1 {
            return None;
        }
        let one = idem[0];
        let neutral = self
            .elements()
            .all(|x| self.mul(one, x) == x && self.mul(x, one) == x);
        let inverses = self
            .elements()
            .all(|x| self.elements().any(|y| self.mul(x, y) == one));
        (neutral && inverses).then_some(one)
    }

    pub fn is_group(&self) -> bool {
        self.group_identity().is_some()
    }

    /// Cayley text format: `n`, then `n` rows of `n` indices, then an optional
    /// `#labels` line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.order);
        for row in self.table.chunks(self.order) {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        if let Some(labels) = &self.labels {
            let _ = writeln!(out, "#labels {}", labels.join(" "));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut order: Option<usize> = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut labels: Option<Vec<String>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("#labels") {
                if labels.is_some() {
                    return Err(parse_err(line_no, "duplicate #labels line"));
                }
                if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                    return Err(parse_err(line_no, "malformed #labels line"));
                }
                labels = Some(rest.split_whitespace().map(str::to_owned).collect());
                continue;
            }
            if line.starts_with('#') {
                return Err(parse_err(line_no, "unknown directive"));
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| parse_err(line_no, &format!("bad index: {e}")))?;
            match order {
                None => {
                    if nums.len() != 1 {
                        return Err(parse_err(line_no, "first line must hold the order"));
                    }
                    if nums[0] == 0 {
                        return Err(Error::Empty);
                    }
                    order = Some(nums[0]);
                }
                Some(n) => {
                    if rows.len() == n {
                        return Err(parse_err(line_no, "more rows than the declared order"));
                    }
                    if nums.len() != n {
                        return Err(Error::NotSquare {
                            row: rows.len(),
                            len: nums.len(),
                            order: n,
                        });
                    }
                    rows.push(nums);
                }
            }
        }
        let n = order.ok_or(Error::Empty)?;
        if rows.len() != n {
            return Err(parse_err(
                text.lines().count(),
                &format!("expected {n} rows, found {}", rows.len()),
            ));
        }
        Self::from_table(rows, labels)
    }

    /// Applies a bijection `perm` (old index -> new index) to the carrier.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        let mut inverse = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || inverse[new] != usize::MAX {
                return Err(Error::NotAnIsomorphism(
                    "relabelling is not a bijection".into(),
                ));
            }
            inverse[new] = old;
        }
        Self::from_fn(n, |a, b| perm[self.mul(inverse[a], inverse[b])])
    }
}

fn check_labels(labels: &[String], order: usize) -> Result<()> {
    if labels.len() != order {
        return Err(Error::BadLabels(format!(
            "{} labels for {order} elements",
            labels.len()
        )));
    }
    if let Some(bad) = labels
        .iter()
        .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
    {
        return Err(Error::BadLabels(format!(
            "label {bad:?} is empty or contains whitespace"
        )));
    }
    Ok(())
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_owned(),
    }
}
