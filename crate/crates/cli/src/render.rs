//! Fixed-width ASCII table rendering.

/// Renders a table with a header row; every column is padded to its widest
/// cell, numeric-looking cells are right-aligned.
pub fn table(headers: &[String], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let numeric = |s: &str| s.chars().all(|c| c.is_ascii_digit() || c == '-');
    let mut out = String::new();
    let mut emit = |cells: &[String], align_numeric: bool| {
        let line: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| {
                if align_numeric && numeric(cell) {
                    format!("{cell:>w$}")
                } else {
                    format!("{cell:<w$}")
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    emit(headers, false);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    emit(&rule, false);
    for row in rows {
        emit(row, true);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_columns() {
        let rendered = table(
            &["name".into(), "n".into()],
            &[
                vec!["a".into(), "5".into()],
                vec!["long".into(), "-12".into()],
            ],
        );
        assert_eq!(rendered, "name  n\n----  ---\na       5\nlong  -12\n");
    }
}
