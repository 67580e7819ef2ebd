use std::fmt;

use serde::{Deserialize, Serialize};

/// An element identifier of a based matrix.
///
/// `S` is the basepoint and sorts before everything else. `Fresh` labels come
/// from a reserved namespace used by the move operations; they sort after all
/// user-supplied names so that adjoining elements never disturbs the minimum
/// of an existing block.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Label {
    S,
    Named(String),
    Fresh(u64),
}

impl Label {
    pub fn named(name: impl Into<String>) -> Self {
        let name = name.into();
        if name == "s" {
            Label::S
        } else {
            Label::Named(name)
        }
    }

    pub fn is_basepoint(&self) -> bool {
        matches!(self, Label::S)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::S => write!(f, "s"),
            Label::Named(n) => write!(f, "{n}"),
            Label::Fresh(k) => write!(f, "#{k}"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for Label {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        if s.is_empty() {
            return Err("empty label".into());
        }
        if let Some(rest) = s.strip_prefix('#') {
            let k = rest
                .parse::<u64>()
                .map_err(|_| format!("bad fresh label {s:?}"))?;
            return Ok(Label::Fresh(k));
        }
        Ok(Label::named(s))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Label::*;
        match (self, other) {
            (S, S) => std::cmp::Ordering::Equal,
            (S, _) => std::cmp::Ordering::Less,
            (_, S) => std::cmp::Ordering::Greater,
            // (len, lexicographic) so that numeric names order numerically
            (Named(a), Named(b)) => (a.len(), a).cmp(&(b.len(), b)),
            (Named(_), Fresh(_)) => std::cmp::Ordering::Less,
            (Fresh(_), Named(_)) => std::cmp::Ordering::Greater,
            (Fresh(a), Fresh(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
