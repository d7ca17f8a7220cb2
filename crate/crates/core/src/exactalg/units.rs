use std::fmt;

use num_traits::One;

use super::laurent::Coeff;
use super::{AlgError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn coeff(self) -> Coeff {
        match self {
            Sign::Plus => Coeff::one(),
            Sign::Minus => -Coeff::one(),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A root of unity of order 1 or 2, kept under its symbolic name (such as
/// `omega(pi)`) so that zero detection stays exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitConstant {
    name: String,
    order: u8,
}

impl UnitConstant {
    pub fn new(name: impl Into<String>, order: u8) -> Result<Self> {
        let name = name.into();
        if order != 1 && order != 2 {
            return Err(AlgError::UnrecognizedShape(format!(
                "unit constant {name} of order {order}; only orders 1 and 2 are supported"
            )));
        }
        Ok(UnitConstant { name, order })
    }

    pub fn trivial(name: impl Into<String>) -> Self {
        UnitConstant { name: name.into(), order: 1 }
    }

    pub fn sign(name: impl Into<String>) -> Self {
        UnitConstant { name: name.into(), order: 2 }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn value(&self) -> Sign {
        if self.order == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn coeff(&self) -> Coeff {
        self.value().coeff()
    }

    /// Product of two such constants; the name records the product.
    pub fn times(&self, other: &UnitConstant) -> UnitConstant {
        let order = if self.value().times(other.value()) == Sign::Plus { 1 } else { 2 };
        UnitConstant { name: format!("{}*{}", self.name, other.name), order }
    }
}

impl fmt::Display for UnitConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(UnitConstant::new("w", 1).unwrap().value(), Sign::Plus);
        assert_eq!(UnitConstant::new("w", 2).unwrap().value(), Sign::Minus);
        assert!(UnitConstant::new("w", 3).is_err());
        let s = UnitConstant::sign("a");
        assert_eq!(s.times(&s).order(), 1);
        assert_eq!(s.times(&UnitConstant::trivial("b")).order(), 2);
    }
}
