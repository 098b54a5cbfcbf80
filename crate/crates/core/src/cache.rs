//! On-disk cache of dual-code enumerations.
//!
//! One JSON-lines file per `(m, modulus)`. The first line is a header; each
//! following line records one weight with its count and the representative
//! triple. Files whose header does not match the requested field are left
//! alone and recomputed around.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::budget::Budget;
use crate::codes::{enumerate_dual, DualEnumeration, DualTriple, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, FieldSpec};

pub const CACHE_VERSION: u32 = 1;
const PREFIX: &str = "dual-";
const SUFFIX: &str = ".jsonl";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheHeader {
    pub version: u32,
    pub m: u32,
    pub modulus_hex: String,
    pub modulus_hash: String,
}

impl CacheHeader {
    pub fn for_spec(spec: &FieldSpec) -> Self {
        let modulus_hex = spec.modulus_hex();
        CacheHeader {
            version: CACHE_VERSION,
            m: spec.m(),
            modulus_hash: modulus_hash(&modulus_hex),
            modulus_hex,
        }
    }
}

/// SHA-256 of the modulus' hex form, lowercase hex.
pub fn modulus_hash(modulus_hex: &str) -> String {
    let digest = Sha256::digest(modulus_hex.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub m: u32,
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub weight: u32,
    /// Decimal string, since counts can exceed `u64` in principle.
    pub count: String,
}

/// What a lookup found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheLookup {
    Hit,
    Miss,
    /// A file exists but belongs to another field or format.
    Stale,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub dir: PathBuf,
    pub files: usize,
    pub bytes: u64,
    pub entries: Vec<CacheEntryInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CacheEntryInfo {
    pub file: String,
    pub header: Option<CacheHeader>,
    pub records: usize,
}

#[derive(Debug, Clone)]
pub struct DualCache {
    dir: PathBuf,
}

impl DualCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DualCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, spec: &FieldSpec) -> PathBuf {
        self.dir.join(format!(
            "{PREFIX}m{}-{}{SUFFIX}",
            spec.m(),
            spec.modulus_hex()
        ))
    }

    /// Reads a cached enumeration; `Stale` files are not touched.
    pub fn load(&self, spec: &FieldSpec) -> Result<(CacheLookup, Option<DualEnumeration>)> {
        let path = self.path_for(spec);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Ok((CacheLookup::Miss, None))
            }
            Err(e) => return Err(e.into()),
        };
        match parse_file(BufReader::new(file), spec) {
            Some(e) => Ok((CacheLookup::Hit, Some(e))),
            None => Ok((CacheLookup::Stale, None)),
        }
    }

    /// Writes atomically: a temporary file in the same directory, then rename.
    pub fn store(&self, spec: &FieldSpec, e: &DualEnumeration) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(spec);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        {
            let w = tmp.as_file_mut();
            serde_json::to_writer(&mut *w, &CacheHeader::for_spec(spec))?;
            w.write_all(b"\n")?;
            for (weight, count) in &e.distribution.counts {
                let t = e.representatives.get(weight).ok_or_else(|| {
                    Error::Consistency(format!("no representative for weight {weight}"))
                })?;
                let rec = CacheRecord {
                    m: spec.m(),
                    a: t.a,
                    b: t.b,
                    c: t.c,
                    weight: *weight,
                    count: count.to_string(),
                };
                serde_json::to_writer(&mut *w, &rec)?;
                w.write_all(b"\n")?;
            }
            w.sync_all()?;
        }
        tmp.persist(&path).map_err(|e| Error::Io(e.to_string()))?;
        Ok(())
    }

    /// Removes this cache's own files and nothing else.
    pub fn clear(&self) -> Result<usize> {
        let mut removed = 0;
        for path in self.own_files()? {
            fs::remove_file(path)?;
            removed += 1;
        }
        Ok(removed)
    }

    pub fn stats(&self) -> Result<CacheStats> {
        let mut stats = CacheStats {
            dir: self.dir.clone(),
            files: 0,
            bytes: 0,
            entries: Vec::new(),
        };
        for path in self.own_files()? {
            stats.files += 1;
            stats.bytes += fs::metadata(&path)?.len();
            let text = fs::read_to_string(&path)?;
            let mut lines = text.lines();
            let header = lines.next().and_then(|l| serde_json::from_str(l).ok());
            stats.entries.push(CacheEntryInfo {
                file: path
                    .file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_default(),
                header,
                records: lines.filter(|l| !l.trim().is_empty()).count(),
            });
        }
        Ok(stats)
    }

    fn own_files(&self) -> Result<Vec<PathBuf>> {
        let rd = match fs::read_dir(&self.dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for entry in rd {
            let path = entry?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            if name.starts_with(PREFIX) && name.ends_with(SUFFIX) && path.is_file() {
                out.push(path);
            }
        }
        out.sort();
        Ok(out)
    }
}

fn parse_file<R: BufRead>(reader: R, spec: &FieldSpec) -> Option<DualEnumeration> {
    let mut lines = reader.lines();
    let header: CacheHeader = serde_json::from_str(&lines.next()?.ok()?).ok()?;
    if header != CacheHeader::for_spec(spec) {
        return None;
    }
    let mut counts = BTreeMap::new();
    let mut representatives = BTreeMap::new();
    for line in lines {
        let line = line.ok()?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CacheRecord = serde_json::from_str(&line).ok()?;
        if rec.m != spec.m() || rec.weight > spec.order() {
            return None;
        }
        let count: BigUint = rec.count.parse().ok()?;
        counts.insert(rec.weight, count);
        representatives.insert(
            rec.weight,
            DualTriple {
                a: rec.a,
                b: rec.b,
                c: rec.c,
            },
        );
    }
    let distribution = WeightDistribution {
        n: spec.order(),
        counts,
    };
    let q = BigUint::from(spec.q());
    if distribution.total() != &q * &q * &q {
        return None;
    }
    Some(DualEnumeration {
        m: spec.m(),
        distribution,
        representatives,
    })
}

/// Enumeration through the cache when one is given.
pub fn cached_enumerate_dual(
    spec: &FieldSpec,
    budget: Budget,
    cache: Option<&DualCache>,
) -> Result<(DualEnumeration, CacheLookup)> {
    let Some(cache) = cache else {
        return Ok((enumerate_dual(spec, budget)?, CacheLookup::Miss));
    };
    let (lookup, found) = cache.load(spec)?;
    if let Some(e) = found {
        return Ok((e, lookup));
    }
    let e = enumerate_dual(spec, budget)?;
    // A stale file stays where it is; ours goes under its own name only when free.
    if lookup == CacheLookup::Miss {
        cache.store(spec, &e)?;
    }
    Ok((e, lookup))
}
