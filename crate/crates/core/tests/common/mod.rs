#![allow(dead_code)]

use std::path::PathBuf;

use gfft_core::binmat::BinaryMatrix;

/// A hand-transcribed binary matrix with optional index orderings.
pub struct Golden {
    pub rows: Vec<String>,
    pub in_perm: Option<Vec<usize>>,
    pub out_perm: Option<Vec<usize>>,
}

impl Golden {
    pub fn matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_rows(&self.rows)
    }
}

pub fn golden(name: &str) -> Golden {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let mut g = Golden { rows: Vec::new(), in_perm: None, out_perm: None };
    let perm = |s: &str| s.split_whitespace().map(|x| x.parse().unwrap()).collect::<Vec<usize>>();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("in:") {
            g.in_perm = Some(perm(rest));
        } else if let Some(rest) = line.strip_prefix("out:") {
            g.out_perm = Some(perm(rest));
        } else {
            assert!(line.chars().all(|c| c == '0' || c == '1'), "bad golden line {line:?} in {name}");
            g.rows.push(line.to_string());
        }
    }
    g
}
