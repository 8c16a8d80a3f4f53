use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;

use cardcalc::dsl::{self, run_batch, Ast, Evaluator, QueryResult, VerdictKind};
use cardcalc::HypothesisContext;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "cardcalc",
    version,
    about = "Cardinal arithmetic under declared hypotheses"
)]
struct Cli {
    /// Comma-separated starting assumptions, e.g. `gch,no-sharp` or `v=l`.
    #[arg(long, global = true, value_name = "LIST")]
    assume: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statements separated by `;`.
    Eval {
        #[arg(short = 'e', long = "expr", value_name = "STMT")]
        expr: String,
        /// One JSON record per line instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Interactive session; `assume` lines persist, `:ctx` shows the context.
    Repl,
    /// Run a file with one statement per line.
    Batch {
        file: String,
        #[arg(long)]
        json: bool,
    },
}

const USAGE_ERROR: u8 = 2;

/// Commas inside brackets belong to the item, as in `SCH(aleph_1, >= aleph_2)`.
fn split_top_level(list: &str) -> Vec<&str> {
    let mut items = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in list.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&list[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&list[start..]);
    items
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn starting_context(list: Option<&str>) -> Result<HypothesisContext, String> {
    let mut ctx = HypothesisContext::empty();
    let Some(list) = list else {
        return Ok(ctx);
    };
    for item in split_top_level(list) {
        let a = dsl::parse_assumption(item).map_err(|e| format!("--assume {item}: {e}"))?;
        ctx = ctx.assume(a).map_err(|e| format!("--assume {item}: {e}"))?;
    }
    Ok(ctx)
}

fn emit(out: &mut impl Write, records: &[QueryResult], json: bool) -> io::Result<()> {
    for r in records {
        if json {
            writeln!(out, "{}", r.to_json())?;
        } else {
            writeln!(out, "{}: {}", r.query, r.pretty())?;
        }
    }
    Ok(())
}

fn batch(input: impl BufRead, ctx: &HypothesisContext, json: bool) -> ExitCode {
    let outcome = match run_batch(input, ctx) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("cardcalc: {e}");
            return ExitCode::from(1);
        }
    };
    let mut stdout = io::stdout().lock();
    if let Err(e) = emit(&mut stdout, &outcome.records, json) {
        eprintln!("cardcalc: {e}");
        return ExitCode::from(1);
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn repl(ctx: HypothesisContext) -> ExitCode {
    let mut ev = Evaluator::new(ctx);
    let stdin = io::stdin();
    let mut stdout = io::stdout();
    loop {
        print!("> ");
        let _ = stdout.flush();
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                eprintln!("cardcalc: {e}");
                return ExitCode::from(1);
            }
        }
        let line = line.trim();
        match line {
            "" => continue,
            ":quit" | ":q" | "quit" | "exit" => break,
            ":ctx" => {
                let d = ev.context().describe();
                println!(
                    "{}",
                    if d.is_empty() {
                        "ZFC".into()
                    } else {
                        d.join(", ")
                    }
                );
                continue;
            }
            _ => {}
        }
        let ast = match dsl::parse(line) {
            Ok(a) => a,
            Err(e) => {
                println!("error: {e}");
                continue;
            }
        };
        let stmts = match ast {
            Ast::Session(items) => items,
            one => vec![one],
        };
        for stmt in stmts {
            let r = ev.statement(&stmt);
            if matches!(stmt, Ast::Assume(_)) && r.verdict != VerdictKind::Error {
                println!("ok");
            } else {
                println!("{}", r.pretty());
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = match starting_context(cli.assume.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("cardcalc: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    match cli.command {
        Command::Eval { expr, json } => batch(expr.as_bytes(), &ctx, json),
        Command::Repl => repl(ctx),
        Command::Batch { file, json } => match File::open(&file) {
            Ok(f) => batch(BufReader::new(f), &ctx, json),
            Err(e) => {
                eprintln!("cardcalc: {file}: {e}");
                ExitCode::from(USAGE_ERROR)
            }
        },
    }
}
