//! CSV output: `,` delimiter, 17 significant digits, `\n` line ends.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::run::Table;

/// Scientific notation with 17 significant digits; `-0` prints as `0`.
pub fn format_value(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn write_table<W: Write>(mut w: W, table: &Table) -> io::Result<()> {
    writeln!(w, "{}", table.header.join(","))?;
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(|&x| format_value(x)).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    w.flush()
}

/// `out.csv` with label `zz` becomes `out_zz.csv`; an empty label keeps the path.
pub fn labelled_path(base: &Path, label: &str) -> PathBuf {
    if label.is_empty() {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_{label}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{label}"),
    };
    base.with_file_name(name)
}

/// Writes every table next to `base` and returns the paths in table order.
pub fn write_tables(base: &Path, tables: &[Table]) -> io::Result<Vec<PathBuf>> {
    let mut paths = Vec::with_capacity(tables.len());
    for t in tables {
        let path = labelled_path(base, &t.label);
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        write_table(io::BufWriter::new(std::fs::File::create(&path)?), t)?;
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_value(1.0), "1.0000000000000000e0");
        assert_eq!(format_value(-0.0), "0.0000000000000000e0");
        let x = 0.1 + 0.2;
        assert_eq!(format_value(x).parse::<f64>().unwrap(), x);
        assert_eq!(format_value(-0.25), "-2.5000000000000000e-1");
    }

    #[test]
    fn table_layout() {
        let t = Table { label: String::new(), header: vec!["t".into(), "x".into()], rows: vec![vec![0.0, 1.5]] };
        let mut buf = Vec::new();
        write_table(&mut buf, &t).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "t,x\n0.0000000000000000e0,1.5000000000000000e0\n");
    }

    #[test]
    fn labels_go_before_the_extension() {
        assert_eq!(labelled_path(Path::new("out/run.csv"), "zz"), PathBuf::from("out/run_zz.csv"));
        assert_eq!(labelled_path(Path::new("run"), "a"), PathBuf::from("run_a"));
        assert_eq!(labelled_path(Path::new("run.csv"), ""), PathBuf::from("run.csv"));
    }
}
