//! On-disk cache of KL tables, one text file per `(n, a, b)`.
//!
//! ```text
//! typeb-kl-cache 1
//! n 3 a 1 b 2
//! 0 0 [[0,1]]
//! ...
//! ```
//! Each body line is `y x p_{y,x}` in group indices, ordered by `x` then `y`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::laurent::Laurent;

use super::kl::Column;
use super::{Group, KLTable, WeightFunction};

pub const FORMAT: &str = "typeb-kl-cache";
pub const VERSION: u32 = 1;

pub fn cache_path(dir: &Path, n: usize, wf: &WeightFunction) -> PathBuf {
    dir.join(format!("kl-n{}-a{}-b{}.txt", n, wf.a, wf.b))
}

pub fn write_table(table: &KLTable, path: &Path) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(e.to_string());
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io)?;
    }
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", FORMAT, VERSION));
    out.push_str(&format!(
        "n {} a {} b {}\n",
        table.n, table.weight.a, table.weight.b
    ));
    for (x, col) in table.columns().iter().enumerate() {
        for (y, c) in col {
            let json = serde_json::to_string(c).map_err(|e| Error::Cache(e.to_string()))?;
            out.push_str(&format!("{} {} {}\n", y, x, json));
        }
    }
    // write then rename so a crash never leaves a truncated file
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(out.as_bytes()).map_err(io)?;
    drop(f);
    fs::rename(&tmp, path).map_err(io)
}

pub fn read_table(path: &Path, n: usize, wf: WeightFunction) -> Result<KLTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::Cache(e.to_string()))?;
    let mut lines = text.lines();
    let bad = |m: &str| Error::Cache(format!("{}: {}", path.display(), m));
    if lines.next() != Some(&format!("{} {}", FORMAT, VERSION)) {
        return Err(bad("unknown format or version"));
    }
    if lines.next() != Some(&format!("n {} a {} b {}", n, wf.a, wf.b)) {
        return Err(bad("header does not match the requested parameters"));
    }
    let size = Group::order(n);
    let mut cols: Vec<Column> = vec![Vec::new(); size];
    for line in lines {
        let mut it = line.splitn(3, ' ');
        let (Some(y), Some(x), Some(p)) = (it.next(), it.next(), it.next()) else {
            return Err(bad("malformed line"));
        };
        let y: u32 = y.parse().map_err(|_| bad("bad index"))?;
        let x: usize = x.parse().map_err(|_| bad("bad index"))?;
        let p: Laurent = serde_json::from_str(p).map_err(|_| bad("bad polynomial"))?;
        if x >= size || y as usize >= size {
            return Err(bad("index out of range"));
        }
        cols[x].push((y, p));
    }
    for c in &mut cols {
        c.sort_by_key(|t| t.0);
    }
    let table = KLTable::from_columns(n, wf, cols)?;
    table.check_normal_form().map_err(|m| bad(&m))?;
    Ok(table)
}

/// Loads the table from `dir` if present, otherwise computes and stores it.
pub fn load_or_compute(
    dir: Option<&Path>,
    n: usize,
    wf: WeightFunction,
    max_n: usize,
) -> Result<KLTable> {
    let Some(dir) = dir else {
        return KLTable::compute(n, wf, max_n);
    };
    if n > max_n.min(super::kl::MAX_N) {
        return KLTable::compute(n, wf, max_n);
    }
    let path = cache_path(dir, n, &wf);
    if path.exists() {
        return read_table(&path, n, wf);
    }
    let table = KLTable::compute(n, wf, max_n)?;
    write_table(&table, &path)?;
    Ok(table)
}
