//! On-disk cache of tower degrees.
//!
//! One canonical text file per (system, degree) under
//! `<dir>/<system>/degree-<n>.txt`.  The header carries a format version
//! and the SHA-256 of the root-system tables; the last line is the SHA-256
//! of everything before it.  Files that fail any check are reported and
//! recomputed.  Writes go through a temporary file and a rename.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use nichols_core::linalg::{SparseVec, Q};
use nichols_core::nichols::{DegreeData, Tower};
use nichols_core::rootsys::RootSystem;
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "nichols-tower-cache";

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub fn sha256_hex(data: &str) -> String {
    hex(&Sha256::digest(data.as_bytes()))
}

pub fn table_hash(rs: &RootSystem) -> String {
    sha256_hex(&rs.canonical_description())
}

fn write_cols(out: &mut String, name: &str, rows: &[Vec<SparseVec>]) {
    for (a, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            for (i, c) in v {
                let _ = writeln!(out, "{name} {a} {j} {i} {c}");
            }
        }
    }
}

/// The canonical text of `B_n`, checksum line included.
pub fn encode_degree(rs: &RootSystem, n: usize, d: &DegreeData) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{MAGIC} {FORMAT_VERSION}");
    let _ = writeln!(s, "system {}", rs.kind());
    let _ = writeln!(s, "table {}", table_hash(rs));
    let _ = writeln!(s, "degree {n}");
    let _ = writeln!(s, "dim {}", d.dim);
    let _ = writeln!(s, "prev {}", d.left_mul.first().map_or(0, Vec::len));
    for k in 0..d.dim {
        let (a, j) = d.parents[k];
        let word: Vec<String> = d.labels[k].iter().map(|l| l.to_string()).collect();
        let _ = writeln!(s, "basis {k} {a} {j} {} : {}", d.yd[k], word.join(" "));
    }
    write_cols(&mut s, "left_mul", &d.left_mul);
    write_cols(&mut s, "deriv", &d.deriv);
    write_cols(&mut s, "reflect", &d.reflect);
    s.push_str("end\n");
    let sum = sha256_hex(&s);
    let _ = writeln!(s, "sha256 {sum}");
    s
}

/// Summary of one cache file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub version: u32,
    pub system: String,
    pub table: String,
    pub degree: usize,
    pub dim: usize,
    pub prev: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheError {
    Io(String),
    Checksum,
    Version(u32),
    Table,
    Mismatch(String),
    Parse(String),
}

impl std::fmt::Display for CacheError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CacheError::Io(e) => write!(f, "unreadable: {e}"),
            CacheError::Checksum => write!(f, "hash mismatch"),
            CacheError::Version(v) => write!(f, "format version {v}, expected {FORMAT_VERSION}"),
            CacheError::Table => write!(f, "root-system table hash differs"),
            CacheError::Mismatch(s) => write!(f, "entry is for {s}"),
            CacheError::Parse(s) => write!(f, "malformed: {s}"),
        }
    }
}

fn parse_err(s: impl Into<String>) -> CacheError {
    CacheError::Parse(s.into())
}

fn field<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str, CacheError> {
    line.and_then(|l| l.strip_prefix(key))
        .and_then(|l| l.strip_prefix(' '))
        .ok_or_else(|| parse_err(format!("missing `{key}`")))
}

fn num<T: std::str::FromStr>(s: &str) -> Result<T, CacheError> {
    s.parse().map_err(|_| parse_err(format!("bad number `{s}`")))
}

fn rational(s: &str) -> Result<Q, CacheError> {
    s.parse().map_err(|_| parse_err(format!("bad rational `{s}`")))
}

/// Checks the trailing checksum and returns the body.
fn checked_body(text: &str) -> Result<&str, CacheError> {
    let trimmed = text.strip_suffix('\n').ok_or(CacheError::Checksum)?;
    let cut = trimmed.rfind('\n').ok_or(CacheError::Checksum)? + 1;
    let (body, last) = trimmed.split_at(cut);
    let sum = last.strip_prefix("sha256 ").ok_or(CacheError::Checksum)?;
    if sha256_hex(body) != sum {
        return Err(CacheError::Checksum);
    }
    Ok(body)
}

pub fn parse_header(text: &str) -> Result<Header, CacheError> {
    let mut lines = text.lines();
    let version = field(lines.next(), MAGIC).and_then(num)?;
    let system = field(lines.next(), "system")?.to_string();
    let table = field(lines.next(), "table")?.to_string();
    let degree = field(lines.next(), "degree").and_then(num)?;
    let dim = field(lines.next(), "dim").and_then(num)?;
    let prev = field(lines.next(), "prev").and_then(num)?;
    Ok(Header {
        version,
        system,
        table,
        degree,
        dim,
        prev,
    })
}

/// Parse and validate a cache file for degree `n` of `rs`.
pub fn decode_degree(rs: &RootSystem, n: usize, text: &str) -> Result<DegreeData, CacheError> {
    let body = checked_body(text)?;
    let h = parse_header(body)?;
    if h.version != FORMAT_VERSION {
        return Err(CacheError::Version(h.version));
    }
    if h.table != table_hash(rs) {
        return Err(CacheError::Table);
    }
    if h.system != rs.kind().to_string() || h.degree != n {
        return Err(CacheError::Mismatch(format!("{} degree {}", h.system, h.degree)));
    }
    let r = rs.num_positive();
    let dim = h.dim;
    let mut d = DegreeData {
        dim,
        labels: Vec::with_capacity(dim),
        parents: Vec::with_capacity(dim),
        yd: Vec::with_capacity(dim),
        left_mul: vec![vec![SparseVec::new(); h.prev]; r],
        deriv: vec![vec![SparseVec::new(); dim]; r],
        reflect: vec![vec![SparseVec::new(); dim]; r],
    };
    let mut ended = false;
    for line in body.lines().skip(6) {
        let mut it = line.split(' ');
        match it.next() {
            Some("basis") => {
                let (head, word) = line
                    .split_once(" : ")
                    .or_else(|| line.strip_suffix(" :").map(|h| (h, "")))
                    .ok_or_else(|| parse_err("basis line"))?;
                let f: Vec<&str> = head.split(' ').collect();
                if f.len() != 5 || num::<usize>(f[1])? != d.labels.len() {
                    return Err(parse_err("basis line"));
                }
                d.parents.push((num(f[2])?, num(f[3])?));
                d.yd.push(num(f[4])?);
                let word: Vec<usize> = word
                    .split(' ')
                    .filter(|w| !w.is_empty())
                    .map(num)
                    .collect::<Result<_, _>>()?;
                d.labels.push(word);
            }
            Some(kind @ ("left_mul" | "deriv" | "reflect")) => {
                let f: Vec<&str> = it.collect();
                if f.len() != 4 {
                    return Err(parse_err(format!("{kind} line")));
                }
                let (a, j, i): (usize, usize, usize) = (num(f[0])?, num(f[1])?, num(f[2])?);
                let c = rational(f[3])?;
                if a >= r {
                    return Err(parse_err("root index out of range"));
                }
                match kind {
                    "left_mul" if j < h.prev => {
                        d.left_mul[a][j].insert(i, c);
                    }
                    "deriv" if j < dim => {
                        d.deriv[a][j].insert(i, c);
                    }
                    "reflect" if j < dim => {
                        d.reflect[a][j].insert(i, c);
                    }
                    _ => return Err(parse_err("column out of range")),
                }
            }
            Some("end") => {
                ended = true;
                break;
            }
            _ => return Err(parse_err(format!("unexpected line `{line}`"))),
        }
    }
    if !ended || d.labels.len() != dim {
        return Err(parse_err("truncated file"));
    }
    Ok(d)
}

/// Outcome of loading one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Cache,
    Computed,
    /// The cached file was rejected and the degree recomputed.
    Replaced(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub sources: Vec<(usize, Source)>,
}

impl LoadStats {
    pub fn hits(&self) -> usize {
        self.sources.iter().filter(|(_, s)| *s == Source::Cache).count()
    }
}

#[derive(Clone, Debug)]
pub struct TowerCache {
    dir: PathBuf,
}

impl TowerCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TowerCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, rs: &RootSystem, n: usize) -> PathBuf {
        self.dir.join(rs.kind().to_string()).join(format!("degree-{n}.txt"))
    }

    pub fn load(&self, rs: &RootSystem, n: usize) -> Result<DegreeData, CacheError> {
        let text = fs::read_to_string(self.path(rs, n)).map_err(|e| CacheError::Io(e.to_string()))?;
        decode_degree(rs, n, &text)
    }

    pub fn store(&self, rs: &RootSystem, n: usize, d: &DegreeData) -> io::Result<()> {
        let path = self.path(rs, n);
        let parent = path.parent().expect("cache paths have a parent");
        fs::create_dir_all(parent)?;
        let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
        tmp.write_all(encode_degree(rs, n, d).as_bytes())?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }

    /// The tower through `max_degree`, reading valid entries and writing
    /// the ones that had to be computed.
    pub fn build(&self, rs: RootSystem, max_degree: usize) -> io::Result<(Tower, LoadStats)> {
        let mut tower = Tower::new(rs.clone());
        let mut stats = LoadStats::default();
        for n in 1..=max_degree {
            if tower.is_closed() {
                break;
            }
            let loaded = match self.load(&rs, n) {
                Ok(d) => match tower.push_degree(d) {
                    Ok(()) => Ok(()),
                    Err(e) => Err(Some(format!("{e}"))),
                },
                Err(CacheError::Io(_)) if !self.path(&rs, n).exists() => Err(None),
                Err(e) => Err(Some(format!("{e}"))),
            };
            match loaded {
                Ok(()) => stats.sources.push((n, Source::Cache)),
                Err(reason) => {
                    let d = tower.compute_degree(n);
                    self.store(&rs, n, &d)?;
                    tower
                        .push_degree(d)
                        .map_err(|e| io::Error::other(format!("{e}")))?;
                    stats.sources.push((n, reason.map_or(Source::Computed, Source::Replaced)));
                }
            }
        }
        Ok((tower, stats))
    }

    /// Every cache file under the directory, sorted by path.
    pub fn entries(&self) -> io::Result<Vec<PathBuf>> {
        let mut out = Vec::new();
        if !self.dir.exists() {
            return Ok(out);
        }
        for sys in fs::read_dir(&self.dir)? {
            let sys = sys?.path();
            if !sys.is_dir() {
                continue;
            }
            for f in fs::read_dir(&sys)? {
                let f = f?.path();
                let name = f.file_name().and_then(|s| s.to_str()).unwrap_or("");
                if name.starts_with("degree-") && name.ends_with(".txt") {
                    out.push(f);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// One line per entry: path, header fields and checksum status.
    pub fn inspect(&self) -> io::Result<Vec<String>> {
        let mut out = Vec::new();
        for p in self.entries()? {
            let text = fs::read_to_string(&p)?;
            let status = match checked_body(&text) {
                Ok(_) => "ok",
                Err(_) => "hash mismatch",
            };
            let line = match parse_header(&text) {
                Ok(h) => format!(
                    "{} version {} system {} degree {} dim {} table {} {status}",
                    p.display(),
                    h.version,
                    h.system,
                    h.degree,
                    h.dim,
                    &h.table[..h.table.len().min(12)]
                ),
                Err(e) => format!("{} {e}", p.display()),
            };
            out.push(line);
        }
        Ok(out)
    }

    /// Remove every cache file and the emptied system directories.
    pub fn clear(&self) -> io::Result<usize> {
        let entries = self.entries()?;
        for p in &entries {
            fs::remove_file(p)?;
        }
        if self.dir.exists() {
            for sys in fs::read_dir(&self.dir)? {
                let sys = sys?.path();
                if sys.is_dir() && fs::read_dir(&sys)?.next().is_none() {
                    fs::remove_dir(&sys)?;
                }
            }
        }
        Ok(entries.len())
    }

    /// Recompute each cached degree of `rs` (or only `degree`) and compare.
    pub fn verify(&self, rs: &RootSystem, degree: Option<usize>) -> io::Result<Vec<(usize, Result<(), String>)>> {
        let mut out = Vec::new();
        let mut tower = Tower::new(rs.clone());
        let mut n = 1;
        while self.path(rs, n).exists() && !tower.is_closed() {
            let fresh = tower.compute_degree(n);
            if degree.is_none() || degree == Some(n) {
                let verdict = match self.load(rs, n) {
                    Ok(d) if d == fresh => Ok(()),
                    Ok(_) => Err(String::from("content differs from recomputation")),
                    Err(e) => Err(format!("{e}")),
                };
                out.push((n, verdict));
            }
            tower
                .push_degree(fresh)
                .map_err(|e| io::Error::other(format!("{e}")))?;
            n += 1;
        }
        Ok(out)
    }
}
