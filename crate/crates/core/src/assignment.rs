//! Per-variable ternary state for a game in progress.

use std::fmt;

use serde::{Deserialize, Serialize};

/// State of a single variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TernaryValue {
    #[default]
    Unassigned,
    False,
    True,
}

impl TernaryValue {
    pub fn from_bool(value: bool) -> Self {
        if value {
            TernaryValue::True
        } else {
            TernaryValue::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            TernaryValue::Unassigned => None,
            TernaryValue::False => Some(false),
            TernaryValue::True => Some(true),
        }
    }

    pub fn is_assigned(self) -> bool {
        self != TernaryValue::Unassigned
    }

    fn bits(self) -> u64 {
        match self {
            TernaryValue::Unassigned => 0,
            TernaryValue::False => 1,
            TernaryValue::True => 2,
        }
    }
}

/// Dense assignment over `n` variables, `x0 .. x{n-1}`.
///
/// Variables outside `0..n` read as [`TernaryValue::Unassigned`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<TernaryValue>,
    assigned: usize,
}

impl Assignment {
    /// All `n` variables unassigned.
    pub fn new(n: usize) -> Self {
        Assignment {
            values: vec![TernaryValue::Unassigned; n],
            assigned: 0,
        }
    }

    pub fn from_values(values: Vec<TernaryValue>) -> Self {
        let assigned = values.iter().filter(|v| v.is_assigned()).count();
        Assignment { values, assigned }
    }

    /// Builds a complete assignment from booleans.
    pub fn from_bools(values: &[bool]) -> Self {
        Assignment::from_values(values.iter().map(|&b| TernaryValue::from_bool(b)).collect())
    }

    /// Number of variables covered.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of assigned variables, `k`.
    pub fn assigned_count(&self) -> usize {
        self.assigned
    }

    pub fn is_complete(&self) -> bool {
        self.assigned == self.values.len()
    }

    pub fn get(&self, var: usize) -> TernaryValue {
        self.values.get(var).copied().unwrap_or_default()
    }

    pub fn value(&self, var: usize) -> Option<bool> {
        self.get(var).as_bool()
    }

    pub fn is_assigned(&self, var: usize) -> bool {
        self.get(var).is_assigned()
    }

    pub fn values(&self) -> &[TernaryValue] {
        &self.values
    }

    /// Assigns `var`, returning `false` (and leaving `self` untouched) when
    /// the variable is out of range or already assigned.
    pub fn assign(&mut self, var: usize, value: bool) -> bool {
        match self.values.get_mut(var) {
            Some(slot) if !slot.is_assigned() => {
                *slot = TernaryValue::from_bool(value);
                self.assigned += 1;
                true
            }
            _ => false,
        }
    }

    /// Copy of `self` with `var` assigned. Panics if the variable is taken.
    pub fn with(&self, var: usize, value: bool) -> Assignment {
        let mut next = self.clone();
        assert!(next.assign(var, value), "variable x{var} is not assignable");
        next
    }

    /// Clears `var`. Used by in-place searches that undo moves.
    pub fn unassign(&mut self, var: usize) {
        if let Some(slot) = self.values.get_mut(var) {
            if slot.is_assigned() {
                *slot = TernaryValue::Unassigned;
                self.assigned -= 1;
            }
        }
    }

    pub fn lowest_unassigned(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_assigned())
    }

    pub fn unassigned(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_assigned())
            .map(|(i, _)| i)
    }

    /// `(index, value)` for every assigned variable, ascending.
    pub fn assigned_pairs(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_bool().map(|b| (i, b)))
    }

    /// True when the assigned variables are exactly `{0, .., k-1}`.
    pub fn is_prefix(&self) -> bool {
        self.values[..self.assigned].iter().all(|v| v.is_assigned())
    }

    /// Two bits per variable packed into words; equal vectors give equal keys.
    pub fn packed(&self) -> Box<[u64]> {
        let mut words = vec![0u64; self.values.len().div_ceil(32).max(1)];
        for (i, v) in self.values.iter().enumerate() {
            words[i / 32] |= v.bits() << (2 * (i % 32));
        }
        words.into_boxed_slice()
    }
}

impl fmt::Display for Assignment {
    /// `index=T|F` pairs separated by spaces, as in position files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, b) in self.assigned_pairs() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}={}", i, if b { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assign_once() {
        let mut a = Assignment::new(3);
        assert!(a.assign(1, true));
        assert!(!a.assign(1, false));
        assert!(!a.assign(3, false));
        assert_eq!(a.assigned_count(), 1);
        assert_eq!(a.value(1), Some(true));
        assert_eq!(a.lowest_unassigned(), Some(0));
        assert!(!a.is_prefix());
        a.unassign(1);
        assert_eq!(a.assigned_count(), 0);
    }

    #[test]
    fn packed_distinguishes_states() {
        let a = Assignment::new(40).with(35, false);
        let b = Assignment::new(40).with(35, true);
        assert_ne!(a.packed(), b.packed());
        assert_eq!(a.packed(), Assignment::new(40).with(35, false).packed());
        assert_eq!(a.packed().len(), 2);
    }

    #[test]
    fn display_lists_pairs() {
        let a = Assignment::new(4).with(0, true).with(3, false);
        assert_eq!(a.to_string(), "0=T 3=F");
        assert_eq!(Assignment::new(2).to_string(), "");
    }
}
