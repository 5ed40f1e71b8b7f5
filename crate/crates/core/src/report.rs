use std::fmt;

use crate::scalar::Scalar;

/// A concrete violation: which identity failed, on which basis indices, and
/// the two sides as coordinate lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of an identity check over basis elements.
///
/// `checked` counts the basis tuples examined for the reported identity
/// family; `unit` names them ("triples", "pairs", ...). A witness is present
/// exactly when `holds` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub holds: bool,
    pub checked: usize,
    pub unit: &'static str,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    pub fn ok(checked: usize, unit: &'static str) -> Self {
        AxiomReport {
            holds: true,
            checked,
            unit,
            witness: None,
        }
    }

    pub fn fail(checked: usize, unit: &'static str, witness: Witness) -> Self {
        AxiomReport {
            holds: false,
            checked,
            unit,
            witness: Some(witness),
        }
    }

    /// Runs `next` only if `self` holds. The combined report keeps the
    /// larger tuple count so the OK line describes the widest sweep.
    pub fn and_then(self, next: impl FnOnce() -> AxiomReport) -> AxiomReport {
        if !self.holds {
            return self;
        }
        let other = next();
        if !other.holds || other.checked >= self.checked {
            other
        } else {
            AxiomReport {
                witness: None,
                ..self
            }
        }
    }

    /// Renames the identity of a witness with a prefix, e.g. `rep1 c2`.
    pub fn prefixed(mut self, prefix: &str) -> AxiomReport {
        if let Some(w) = &mut self.witness {
            w.identity = format!("{prefix} {}", w.identity);
        }
        self
    }
}

fn write_values(f: &mut fmt::Formatter<'_>, values: &[Scalar]) -> fmt::Result {
    if values.len() == 1 {
        return write!(f, "{}", values[0]);
    }
    write!(f, "[")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}

impl fmt::Display for Witness {
    /// `<identity> at (i,j,k): lhs=... rhs=...` with one-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.identity)?;
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "): lhs=")?;
        write_values(f, &self.lhs)?;
        write!(f, " rhs=")?;
        write_values(f, &self.rhs)
    }
}

/// Iterates every index tuple in `0..n` of the given arity, lexicographically,
/// and reports the first one where `eval` returns differing sides.
pub(crate) fn sweep(
    n: usize,
    arity: usize,
    unit: &'static str,
    identity: &str,
    mut eval: impl FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
) -> AxiomReport {
    let total = n.pow(arity as u32);
    let mut idx = vec![0usize; arity];
    for _ in 0..total {
        let (lhs, rhs) = eval(&idx);
        if lhs != rhs {
            return AxiomReport::fail(
                total,
                unit,
                Witness {
                    identity: identity.to_string(),
                    indices: idx,
                    lhs,
                    rhs,
                },
            );
        }
        for slot in (0..arity).rev() {
            idx[slot] += 1;
            if idx[slot] < n {
                break;
            }
            idx[slot] = 0;
        }
    }
    AxiomReport::ok(total, unit)
}

/// Reports the first nonzero coefficient of a list of tensors that must
/// vanish, indexed as `(outer, coefficient indices...)`.
pub(crate) fn first_nonzero(
    identity: &str,
    unit: &'static str,
    checked: usize,
    prefix: &[usize],
    coeffs: &[Scalar],
    shape: &[usize],
) -> Option<AxiomReport> {
    let pos = coeffs.iter().position(|c| !c.is_zero())?;
    let mut rest = pos;
    let mut idx = vec![0; shape.len()];
    for (slot, &len) in shape.iter().enumerate().rev() {
        idx[slot] = rest % len;
        rest /= len;
    }
    let mut indices = prefix.to_vec();
    indices.extend(idx);
    let zero = coeffs[pos].field().zero();
    Some(AxiomReport::fail(
        checked,
        unit,
        Witness {
            identity: identity.to_string(),
            indices,
            lhs: vec![coeffs[pos].clone()],
            rhs: vec![zero],
        },
    ))
}
