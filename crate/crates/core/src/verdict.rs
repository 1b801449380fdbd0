use std::fmt;

use serde::Serialize;

/// Closed-form classification labels shared by all families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    #[serde(rename = "NTF")]
    Ntf,
    #[serde(rename = "ANTF")]
    Antf,
    #[serde(rename = "NOT_ANTF")]
    NotAntf,
    /// No closed form applies; only the oracle can say anything.
    #[serde(rename = "ORACLE_ONLY")]
    OracleOnly,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Ntf => "NTF",
            Classification::Antf => "ANTF",
            Classification::NotAntf => "NOT_ANTF",
            Classification::OracleOnly => "ORACLE_ONLY",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
