use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::hash::Hash;
use std::path::Path;

use crate::env::{StateKey, NUM_ACTIONS};
use crate::error::{Error, Result};
use crate::geometry::GridPos;

/// Sparse action-value table. Unvisited states read as `default_value` for
/// every action.
#[derive(Debug, Clone)]
pub struct QTable<S = StateKey> {
    entries: HashMap<S, Vec<f64>>,
    n_actions: usize,
    default_value: f64,
}

impl<S: Eq + Hash> PartialEq for QTable<S> {
    fn eq(&self, other: &Self) -> bool {
        self.n_actions == other.n_actions && self.default_value == other.default_value && self.entries == other.entries
    }
}

impl<S: Clone + Eq + Hash> QTable<S> {
    pub fn new(n_actions: usize, default_value: f64) -> Self {
        assert!(n_actions > 0, "a Q-table needs at least one action");
        assert!(default_value.is_finite(), "default Q value must be finite");
        Self {
            entries: HashMap::new(),
            n_actions,
            default_value,
        }
    }

    pub fn n_actions(&self) -> usize {
        self.n_actions
    }

    pub fn default_value(&self) -> f64 {
        self.default_value
    }

    /// Number of states with stored values.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, state: &S, action: usize) -> f64 {
        self.entries
            .get(state)
            .map_or(self.default_value, |row| row[action])
    }

    /// Copy of the action values for `state`.
    pub fn row(&self, state: &S) -> Vec<f64> {
        self.entries
            .get(state)
            .cloned()
            .unwrap_or_else(|| vec![self.default_value; self.n_actions])
    }

    pub fn set(&mut self, state: &S, action: usize, value: f64) {
        assert!(value.is_finite(), "Q values must stay finite (got {value})");
        let (n, d) = (self.n_actions, self.default_value);
        self.entries.entry(state.clone()).or_insert_with(|| vec![d; n])[action] = value;
    }

    pub fn set_row(&mut self, state: S, values: Vec<f64>) {
        assert_eq!(values.len(), self.n_actions);
        assert!(values.iter().all(|v| v.is_finite()), "Q values must stay finite");
        self.entries.insert(state, values);
    }

    pub fn max_value(&self, state: &S) -> f64 {
        match self.entries.get(state) {
            Some(row) => row.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            None => self.default_value,
        }
    }

    /// Greedy action; ties go to the lowest action index.
    pub fn argmax(&self, state: &S) -> usize {
        match self.entries.get(state) {
            Some(row) => argmax(row),
            None => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, &[f64])> {
        self.entries.iter().map(|(s, v)| (s, v.as_slice()))
    }
}

pub(crate) fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

const HEADER: &str = "# aquaswipt q-table v1";

impl QTable<StateKey> {
    /// Plain-text form: a header, a `default` line, then one line per state
    /// (`x y z with_data undercharged gain_bin q0 … q5`) in sorted key order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        out.push_str("# x y z covered_with_data covered_undercharged gain_bin q[+x] q[-x] q[+y] q[-y] q[+z] q[-z]\n");
        let _ = writeln!(out, "default {}", self.default_value);
        let mut keys: Vec<_> = self.entries.keys().collect();
        keys.sort();
        for k in keys {
            let _ = write!(
                out,
                "{} {} {} {} {} {}",
                k.auv_pos.x, k.auv_pos.y, k.auv_pos.z, k.covered_with_data, k.covered_undercharged, k.gain_bin
            );
            for v in &self.entries[k] {
                // `{}` prints the shortest representation that round-trips exactly.
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, l)) if l.trim() == HEADER => {}
            _ => return Err(Error::Parse(format!("q-table must start with `{HEADER}`"))),
        }
        let mut table: Option<QTable<StateKey>> = None;
        for (no, line) in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("q-table line {}: {what}", no + 1));
            if let Some(rest) = line.strip_prefix("default") {
                let d: f64 = rest.trim().parse().map_err(|_| bad("bad default value"))?;
                if !d.is_finite() {
                    return Err(bad("default must be finite"));
                }
                table = Some(QTable::new(NUM_ACTIONS, d));
                continue;
            }
            let t = table.as_mut().ok_or_else(|| bad("state row before `default` line"))?;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 + NUM_ACTIONS {
                return Err(bad(&format!("expected {} fields, found {}", 6 + NUM_ACTIONS, fields.len())));
            }
            let int = |s: &str| s.parse::<i32>().map_err(|_| bad("bad integer"));
            let small = |s: &str| s.parse::<u8>().ok().filter(|v| *v <= 3).ok_or_else(|| bad("bin out of range"));
            let key = StateKey {
                auv_pos: GridPos::new(int(fields[0])?, int(fields[1])?, int(fields[2])?),
                covered_with_data: small(fields[3])?,
                covered_undercharged: small(fields[4])?,
                gain_bin: small(fields[5])?,
            };
            let values = fields[6..]
                .iter()
                .map(|s| s.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| bad("bad Q value")))
                .collect::<Result<Vec<_>>>()?;
            t.set_row(key, values);
        }
        table.ok_or_else(|| Error::Parse("q-table has no `default` line".into()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_text(&text)
    }
}
