//! Isomorphism classes of graphs, cached in memory and optionally on disk.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use crate::seidel::canon::graph_class_codes;

/// Directory for cached class lists (`classes-N.txt`, one hex code per line).
pub const CACHE_ENV: &str = "EQLINES_CACHE_DIR";

fn memory() -> &'static Mutex<HashMap<usize, Arc<Vec<u128>>>> {
    static CELL: OnceLock<Mutex<HashMap<usize, Arc<Vec<u128>>>>> = OnceLock::new();
    CELL.get_or_init(Default::default)
}

fn cache_file(n: usize) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join(format!("classes-{n}.txt")))
}

fn read_cache(n: usize) -> Option<Vec<u128>> {
    let text = std::fs::read_to_string(cache_file(n)?).ok()?;
    let codes: Vec<u128> = text.lines().map(|l| u128::from_str_radix(l.trim(), 16)).collect::<Result<_, _>>().ok()?;
    // a damaged or truncated file is ignored rather than trusted
    let sorted = codes.windows(2).all(|w| w[0] < w[1]);
    (sorted && !codes.is_empty()).then_some(codes)
}

fn write_cache(n: usize, codes: &[u128]) {
    let Some(path) = cache_file(n) else { return };
    let text: String = codes.iter().map(|c| format!("{c:x}\n")).collect();
    let tmp = path.with_extension("tmp");
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    if std::fs::write(&tmp, text).is_ok() {
        let _ = std::fs::rename(&tmp, &path);
    }
}

/// Canonical codes of all graphs on `n` vertices, sorted.
pub fn class_codes(n: usize) -> Arc<Vec<u128>> {
    if let Some(c) = memory().lock().expect("cache lock").get(&n) {
        return c.clone();
    }
    let codes = match read_cache(n) {
        Some(c) => c,
        None => {
            let c = graph_class_codes(n);
            write_cache(n, &c);
            c
        }
    };
    let codes = Arc::new(codes);
    memory().lock().expect("cache lock").insert(n, codes.clone());
    codes
}
