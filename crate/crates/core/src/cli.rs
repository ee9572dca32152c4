//! Command-line front end. [`run`] takes explicit streams so the binary stays a
//! one-liner and the commands can be tested in-process.
//!
//! Every instance argument is one quoted string (`"4 3 1 2"`, `"2 6/4 5 7/1 8"`).
//! With no instance arguments, or a single `-`, instances are read from stdin,
//! one per line, and answered line by line.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bell::{avoider_to_partition, partition_to_avoider};
use crate::bijection::{inverse, ForwardTrace};
use crate::enumeration::{
    joint_statistic_table, Caps, ExpectedSequence, VerifyOptions, verify_all,
};
use crate::error::{Error, ErrorKind, Result};
use crate::permutation::{AvoidanceMethod, DashedPattern, Permutation};
use crate::setpartition::SetPartition;

pub const EXIT_OK: i32 = 0;
/// Internal errors and I/O failures on the output streams.
pub const EXIT_FAILURE: i32 = 1;
/// Unparsable input, including command-line usage errors.
pub const EXIT_PARSE: i32 = 2;
/// Well-formed input outside the map's domain, or a failed verification.
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CAP: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err.kind() {
        ErrorKind::Parse => EXIT_PARSE,
        ErrorKind::Domain => EXIT_DOMAIN,
        ErrorKind::CapExceeded => EXIT_CAP,
        ErrorKind::Internal => EXIT_FAILURE,
    }
}

#[derive(Debug, Parser)]
#[command(name = "avoiders", version, about = "Bijection between (32-41, 41-32)-avoiding permutations and indecomposable set partitions")]
pub struct Cli {
    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map avoiders of [n] to indecomposable partitions of [n+1].
    Map {
        /// Print every intermediate step of the five-step map.
        #[arg(long)]
        show_steps: bool,
        inputs: Vec<String>,
    },
    /// Map indecomposable partitions of [n+1] back to avoiders of [n].
    Unmap { inputs: Vec<String> },
    /// Test avoidance with all three methods and report any occurrence.
    Check { inputs: Vec<String> },
    /// List or count a class of objects of one size.
    Enumerate {
        class: Class,
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustively verify every property for sizes 1..=MAX_N.
    Verify {
        max_n: usize,
        /// Rayon worker threads.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Expected-count file: header line naming the sequence, one integer per line.
        #[arg(long)]
        expected: Option<PathBuf>,
        /// Emit key=value lines instead of the text report.
        #[arg(long)]
        key_value: bool,
    },
    /// Avoiders ending in 1 against set partitions of [n-1].
    Bell {
        direction: BellDirection,
        inputs: Vec<String>,
    },
    /// Joint distribution of run count and block count over avoiders of [n].
    Stats { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Avoiders,
    #[value(name = "avoiders-ending-1")]
    AvoidersEndingInOne,
    Partitions,
    Indecomposable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BellDirection {
    ToPartition,
    ToAvoider,
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn BufRead) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Context {
        json: cli.json,
        out,
        err,
        status: EXIT_OK,
    };
    if let Err(e) = ctx.dispatch(cli.command, stdin) {
        ctx.fail(&e);
    }
    ctx.status
}

struct Context<'a> {
    json: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    status: i32,
}

impl Context<'_> {
    fn fail(&mut self, e: &Error) {
        let _ = writeln!(self.err, "error: {e}");
        if self.status == EXIT_OK {
            self.status = exit_code(e);
        }
    }

    fn line(&mut self, text: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", text.as_ref())?;
        Ok(())
    }

    /// Runs `handle` on every instance, reporting failures per instance.
    fn each_instance(
        &mut self,
        inputs: Vec<String>,
        stdin: &mut dyn BufRead,
        mut handle: impl FnMut(&mut Self, &str) -> Result<()>,
    ) -> Result<()> {
        let from_stdin = inputs.is_empty() || (inputs.len() == 1 && inputs[0] == "-");
        let mut process = |ctx: &mut Self, text: &str| -> Result<()> {
            if let Err(e) = handle(ctx, text) {
                if let Error::Io(_) = e {
                    return Err(e);
                }
                if ctx.json {
                    let kind = format!("{:?}", e.kind()).to_lowercase();
                    ctx.line(json!({ "input": text, "error": e.to_string(), "kind": kind }).to_string())?;
                }
                ctx.fail(&e);
            }
            Ok(())
        };
        if from_stdin {
            for line in stdin.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                process(self, line.trim())?;
            }
        } else {
            for text in &inputs {
                process(self, text)?;
            }
        }
        Ok(())
    }

    fn dispatch(&mut self, command: Command, stdin: &mut dyn BufRead) -> Result<()> {
        match command {
            Command::Map { show_steps, inputs } => {
                self.each_instance(inputs, stdin, |ctx, text| ctx.map(text, show_steps))
            }
            Command::Unmap { inputs } => self.each_instance(inputs, stdin, Self::unmap),
            Command::Check { inputs } => self.each_instance(inputs, stdin, Self::check),
            Command::Enumerate { class, n, count_only } => self.enumerate(class, n, count_only),
            Command::Verify {
                max_n,
                workers,
                expected,
                key_value,
            } => self.verify(max_n, workers, expected, key_value),
            Command::Bell { direction, inputs } => {
                self.each_instance(inputs, stdin, |ctx, text| ctx.bell(direction, text))
            }
            Command::Stats { n } => self.stats(n),
        }
    }

    fn map(&mut self, text: &str, show_steps: bool) -> Result<()> {
        let p: Permutation = text.parse()?;
        let trace = ForwardTrace::new(&p)?;
        if self.json {
            let mut obj = json!({ "input": p.to_string(), "output": trace.output.to_string() });
            if show_steps {
                let mut steps = serde_json::Map::new();
                if let Some(five) = &trace.five_step {
                    for (label, line) in five.step_lines() {
                        steps.insert(label.into(), line.into());
                    }
                }
                if let Some(t) = &trace.tweaked {
                    steps.insert("tweak".into(), t.to_string().into());
                }
                obj["steps"] = steps.into();
            }
            return self.line(obj.to_string());
        }
        if show_steps {
            match &trace.five_step {
                Some(five) => {
                    for (label, line) in five.step_lines() {
                        self.line(format!("{label}: {line}"))?;
                    }
                    if let Some(t) = &trace.tweaked {
                        self.line(format!("tweak: {t}"))?;
                    }
                }
                None => self.line("identity: one-block partition")?,
            }
        }
        self.line(trace.output.to_string())
    }

    fn unmap(&mut self, text: &str) -> Result<()> {
        let partition: SetPartition = text.parse()?;
        let p = inverse(&partition)?;
        if self.json {
            return self.line(json!({ "input": partition.to_string(), "output": p.to_string() }).to_string());
        }
        self.line(p.to_string())
    }

    fn check(&mut self, text: &str) -> Result<()> {
        let p: Permutation = text.parse()?;
        let verdicts = AvoidanceMethod::ALL.map(|m| p.avoids_pair(m));
        let witnesses: Vec<(DashedPattern, [usize; 4])> = DashedPattern::ALL
            .into_iter()
            .filter_map(|pat| p.find_dashed(pat).map(|w| (pat, w)))
            .collect();
        let agree = verdicts.iter().all(|&v| v == verdicts[0]);
        if self.json {
            let obj = json!({
                "input": p.to_string(),
                "avoider": verdicts[0],
                "methods_agree": agree,
                "methods": {
                    "direct": verdicts[0],
                    "characterization": verdicts[1],
                    "nested_descents": verdicts[2],
                },
                "witnesses": witnesses
                    .iter()
                    .map(|(pat, w)| json!({ "pattern": pat.to_string(), "positions": w }))
                    .collect::<Vec<_>>(),
            });
            return self.line(obj.to_string());
        }
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let summary = if agree { "all three methods" } else { "METHODS DISAGREE" };
        self.line(format!("{p}: avoider: {} ({summary})", yes_no(verdicts[0])))?;
        for (m, v) in AvoidanceMethod::ALL.iter().zip(verdicts) {
            let name = serde_json::to_value(m).unwrap();
            self.line(format!("  {}: {}", name.as_str().unwrap(), yes_no(v)))?;
        }
        for (pat, w) in witnesses {
            self.line(format!("  contains {pat} at positions ({}, {}, {}, {})", w[0], w[1], w[2], w[3]))?;
        }
        Ok(())
    }

    fn enumerate(&mut self, class: Class, n: usize, count_only: bool) -> Result<()> {
        let caps = Caps::from_env();
        let items: Box<dyn Iterator<Item = String>> = match class {
            Class::Avoiders => Box::new(caps.permutations(n)?.filter(Permutation::is_avoider).map(|p| p.to_string())),
            Class::AvoidersEndingInOne => Box::new(
                caps.permutations(n)?
                    .filter(|p| p.entries().last() == Some(&1) && p.is_avoider())
                    .map(|p| p.to_string()),
            ),
            Class::Partitions => Box::new(caps.set_partitions(n)?.map(|p| p.to_string())),
            Class::Indecomposable => Box::new(
                caps.set_partitions(n)?
                    .filter(SetPartition::is_indecomposable)
                    .map(|p| p.to_string()),
            ),
        };
        let name = class.to_possible_value().unwrap().get_name().to_owned();
        if count_only {
            let count = items.count();
            if self.json {
                return self.line(json!({ "class": name, "n": n, "count": count }).to_string());
            }
            return self.line(count.to_string());
        }
        for item in items {
            if self.json {
                self.line(json!({ "class": name, "n": n, "item": item }).to_string())?;
            } else {
                self.line(item)?;
            }
        }
        Ok(())
    }

    fn verify(&mut self, max_n: usize, workers: usize, expected: Option<PathBuf>, key_value: bool) -> Result<()> {
        let expected = expected
            .map(|path| fs::read_to_string(path)?.parse::<ExpectedSequence>())
            .transpose()?;
        let options = VerifyOptions {
            workers,
            caps: Caps::from_env(),
        };
        let mut report = verify_all(max_n, &options)?;
        if let Some(exp) = &expected {
            report.compare_expected(exp);
        }
        if self.json {
            self.line(serde_json::to_string(&report).map_err(|e| Error::Invariant(e.to_string()))?)?;
        } else if key_value {
            write!(self.out, "{}", report.to_key_values())?;
        } else {
            write!(self.out, "{}", report.to_text())?;
        }
        if !report.passed() && self.status == EXIT_OK {
            self.status = EXIT_DOMAIN;
        }
        Ok(())
    }

    fn bell(&mut self, direction: BellDirection, text: &str) -> Result<()> {
        let (input, output) = match direction {
            BellDirection::ToPartition => {
                let p: Permutation = text.parse()?;
                (p.to_string(), avoider_to_partition(&p)?.to_string())
            }
            BellDirection::ToAvoider => {
                let s: SetPartition = text.parse()?;
                (s.to_string(), partition_to_avoider(&s)?.to_string())
            }
        };
        if self.json {
            let dir = direction.to_possible_value().unwrap().get_name().to_owned();
            return self.line(json!({ "direction": dir, "input": input, "output": output }).to_string());
        }
        self.line(output)
    }

    fn stats(&mut self, n: usize) -> Result<()> {
        Caps::from_env().check_permutation_size(n)?;
        if n == 0 {
            return Err(Error::TooSmall { size: 0, min: 1 });
        }
        let table = joint_statistic_table(n)?;
        if self.json {
            let obj = json!({
                "n": n,
                "cells": table.cells,
                "off_diagonal": table.off_diagonal_mass(),
            });
            return self.line(obj.to_string());
        }
        let mut header = String::from("runs\\blocks");
        for b in 1..=n {
            header.push_str(&format!(" {b:>8}"));
        }
        self.line(header)?;
        for r in 1..=n {
            let mut row = format!("{r:>11}");
            for b in 1..=n {
                row.push_str(&format!(" {:>8}", table.get(r, b)));
            }
            self.line(row)?;
        }
        self.line(format!("off-diagonal: {}", table.off_diagonal_mass()))
    }
}
