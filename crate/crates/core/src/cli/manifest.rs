use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDigest {
    /// File path, or `-` for standard output.
    pub path: String,
    pub sha256: String,
}

/// Record of one CLI run: enough to re-run it and check the outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    /// Normalized argument vector, every global flag spelled out.
    pub command: Vec<String>,
    pub seed: u64,
    pub version: String,
    pub outputs: Vec<OutputDigest>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl RunManifest {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        RunManifest {
            command,
            seed,
            version: format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")),
            outputs: Vec::new(),
        }
    }

    pub fn record_file(&mut self, path: &Path) -> Result<()> {
        let bytes = std::fs::read(path)?;
        self.outputs.push(OutputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        });
        Ok(())
    }

    pub fn record_stdout(&mut self, bytes: &[u8]) {
        self.outputs.push(OutputDigest {
            path: "-".into(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serialization is infallible");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    /// Files whose current digest differs from the recorded one (stdout entries are skipped).
    pub fn mismatches(&self) -> Result<Vec<PathBuf>> {
        let mut bad = Vec::new();
        for o in self.outputs.iter().filter(|o| o.path != "-") {
            let path = PathBuf::from(&o.path);
            let ok = std::fs::read(&path).is_ok_and(|b| sha256_hex(&b) == o.sha256);
            if !ok {
                bad.push(path);
            }
        }
        Ok(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_abc() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn mismatch_detection() {
        let dir = tempfile::tempdir().unwrap();
        let f = dir.path().join("a.txt");
        std::fs::write(&f, "one").unwrap();
        let mut m = RunManifest::new(vec!["x".into()], 0);
        m.record_file(&f).unwrap();
        m.record_stdout(b"hi");
        assert!(m.mismatches().unwrap().is_empty());
        std::fs::write(&f, "two").unwrap();
        assert_eq!(m.mismatches().unwrap(), vec![f]);
    }
}
