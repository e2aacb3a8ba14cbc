//! Indented `key: value` report text.

use std::fmt::Display;

#[derive(Default)]
pub struct Report {
    out: String,
    depth: usize,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        self.line(format!("{key}: {value}"));
    }

    pub fn line(&mut self, text: impl AsRef<str>) {
        for _ in 0..self.depth {
            self.out.push_str("  ");
        }
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }

    pub fn section(&mut self, name: &str) {
        self.line(format!("{name}:"));
        self.depth += 1;
    }

    pub fn end(&mut self) {
        self.depth = self.depth.saturating_sub(1);
    }

    pub fn finish(self) -> String {
        self.out
    }
}
