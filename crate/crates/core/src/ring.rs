use serde::{Deserialize, Serialize};

/// Coefficient ring of a based matrix: the integers or the field with two
/// elements. All pairing values, annulators and coefficient groups in one
/// computation live over the same ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Z2")]
    Z2,
}

impl Ring {
    pub fn normalize(self, v: i64) -> i64 {
        match self {
            Ring::Z => v,
            Ring::Z2 => v.rem_euclid(2),
        }
    }

    pub fn add(self, a: i64, b: i64) -> i64 {
        self.normalize(a + b)
    }

    pub fn sub(self, a: i64, b: i64) -> i64 {
        self.normalize(a - b)
    }

    pub fn neg(self, a: i64) -> i64 {
        self.normalize(-a)
    }

    pub fn mul(self, a: i64, b: i64) -> i64 {
        self.normalize(a * b)
    }

    /// Whether `v` is a legal stored entry. Over Z2 entries are kept as 0 or 1.
    pub fn contains(self, v: i64) -> bool {
        match self {
            Ring::Z => true,
            Ring::Z2 => v == 0 || v == 1,
        }
    }
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Z2 => write!(f, "Z2"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" | "z" => Ok(Ring::Z),
            "Z2" | "z2" => Ok(Ring::Z2),
            _ => Err(format!("unknown ring {s:?} (expected Z or Z2)")),
        }
    }
}
