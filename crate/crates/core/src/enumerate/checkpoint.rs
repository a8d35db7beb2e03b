//! Append-only JSON-lines record of finished search blocks.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::IndexKind;

/// Result of one block for one diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointLine {
    pub n: usize,
    pub d: usize,
    pub g: usize,
    pub block_id: usize,
    pub index: IndexKind,
    pub min_quarters: Option<i64>,
    pub minimizer_graph6: Vec<String>,
    pub count: u64,
}

/// Lines grouped by `(g, block_id)` and then by diameter.
pub type Finished = HashMap<(usize, usize), HashMap<usize, CheckpointLine>>;

/// Reads the lines belonging to `(n, index)`. A torn final line (no
/// trailing newline) is ignored; any other malformed line is an error.
pub fn load(path: &Path, n: usize, index: IndexKind) -> Result<Finished> {
    let mut out = Finished::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    let mut reader = BufReader::new(file);
    let mut line = String::new();
    let mut number = 0;
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        number += 1;
        let complete = line.ends_with('\n');
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let parsed: CheckpointLine = match serde_json::from_str(text) {
            Ok(p) => p,
            Err(_) if !complete => break,
            Err(e) => return Err(Error::Parse(format!("{}:{number}: {e}", path.display()))),
        };
        if parsed.n == n && parsed.index == index {
            out.entry((parsed.g, parsed.block_id)).or_default().insert(parsed.d, parsed);
        }
    }
    Ok(out)
}

/// Shared appender; each block's lines go out in a single write.
pub struct Writer {
    file: Mutex<File>,
}

impl Writer {
    /// Opens for appending, first cutting off a torn final line so new
    /// records start on a fresh line.
    pub fn open(path: &Path) -> Result<Self> {
        if let Ok(bytes) = std::fs::read(path) {
            if !bytes.is_empty() && !bytes.ends_with(b"\n") {
                let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
                OpenOptions::new().write(true).open(path)?.set_len(keep as u64)?;
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Writer { file: Mutex::new(file) })
    }

    pub fn append(&self, lines: &[CheckpointLine]) -> Result<()> {
        let mut text = String::new();
        for line in lines {
            text.push_str(&serde_json::to_string(line).map_err(|e| Error::Io(e.to_string()))?);
            text.push('\n');
        }
        let mut file = self.file.lock().expect("checkpoint writer poisoned");
        file.write_all(text.as_bytes())?;
        file.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(d: usize, block_id: usize) -> CheckpointLine {
        CheckpointLine {
            n: 6,
            d,
            g: 3,
            block_id,
            index: IndexKind::RevisedEdgeSzeged,
            min_quarters: Some(100),
            minimizer_graph6: vec!["E?bw".into()],
            count: 2,
        }
    }

    #[test]
    fn round_trip_and_torn_tail() {
        let dir = std::env::temp_dir().join(format!("szeged-ckpt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.jsonl");
        let _ = std::fs::remove_file(&path);
        let w = Writer::open(&path).unwrap();
        w.append(&[line(2, 1), line(3, 1)]).unwrap();
        drop(w);
        std::fs::OpenOptions::new().append(true).open(&path).unwrap().write_all(b"{\"n\":6,\"d\"").unwrap();
        let loaded = load(&path, 6, IndexKind::RevisedEdgeSzeged).unwrap();
        assert_eq!(loaded[&(3, 1)].len(), 2);
        assert_eq!(loaded[&(3, 1)][&2], line(2, 1));
        assert!(load(&path, 7, IndexKind::RevisedEdgeSzeged).unwrap().is_empty());
        let w = Writer::open(&path).unwrap();
        w.append(&[line(4, 2)]).unwrap();
        drop(w);
        let loaded = load(&path, 6, IndexKind::RevisedEdgeSzeged).unwrap();
        assert_eq!((loaded.len(), loaded[&(3, 2)][&4].d), (2, 4));
        std::fs::write(&path, "garbage\n").unwrap();
        assert!(load(&path, 6, IndexKind::RevisedEdgeSzeged).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
