//! Branch-data file parsing for the CLI.
//!
//! The format is six lines of seven comma-separated integers
//! `a,m1,...,m6`, in the order `D1, D2, D3, L1, L2, L3`. Blank lines and
//! `#` comments are allowed anywhere.

use anyhow::{anyhow, bail, Result};

use blochcheck_core::picard::DivisorClass;
use blochcheck_core::BranchData;

pub fn parse_branch_file(text: &str) -> Result<BranchData> {
    let mut classes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let class = DivisorClass::parse(content)
            .map_err(|e| anyhow!("branch file line {lineno}: {e}"))?;
        classes.push(class);
    }
    if classes.len() != 6 {
        bail!(
            "branch file must contain 6 classes (D1,D2,D3,L1,L2,L3), got {}",
            classes.len()
        );
    }
    Ok(BranchData {
        d: [classes[0], classes[1], classes[2]],
        l: [classes[3], classes[4], classes[5]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_format() {
        let text = "# Inoue branch data\n\
                    5,3,2,3,0,2,2\n3,1,2,1,2,0,0\n7,1,2,1,4,4,4\n\
                    5,1,2,1,3,2,2\n6,2,2,2,2,3,3\n4,2,2,2,1,1,1\n";
        let b = parse_branch_file(text).unwrap();
        assert_eq!(b, blochcheck_core::cover::inoue_branch_data());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_branch_file("0,0,0,0,0,0,0\n1,2\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let err = parse_branch_file("0,0,0,0,0,0,0\n").unwrap_err();
        assert!(err.to_string().contains("got 1"));
    }
}
