//! Batch front end for `canonsum-core`: evaluate colorings, classify
//! prefixes, thin, decide the columns property, check encodings and run the
//! brute-force oracles.
//!
//! Exit status is 0 on success, 1 for usage and domain errors, 2 when a
//! budget is exceeded or a thinning run falls short of the requested length.

use std::ffi::OsString;
use std::fmt::Write as _;

use canonsum_core::colorings::{eval_pair_coloring, eval_triple_coloring};
use canonsum_core::encoding::{blocks_to_x, f_encode, j_alt, verify_alt_identity};
use canonsum_core::oracle::{
    enumerate_canonical_colorings, er_search, thinned_interval_prefix, witness_exclusion_report,
};
use canonsum_core::rado::{
    canonical_rado_verdict, columns_property, ghl_classify, search_solutions, single_equation_regular,
};
use canonsum_core::thinning::{
    ramsey_focus, split_case_ab, star_thin, thin_interval_rainbow, thin_residue, ValuationCase,
};
use canonsum_core::{classify_canonical, Error, GroundSet, Parity, PatternLabel, TheoremProfile};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

pub mod input;

use input::InputError;

#[derive(Parser, Debug)]
#[command(
    name = "canonsum",
    version,
    about = "Canonical Ramsey patterns for sums and alternating sums"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a coloring on a list of values
    Color(ColorArgs),
    /// Decide which patterns of a theorem profile survive on a prefix
    Classify(ClassifyArgs),
    /// Extract structured subsequences
    Thin(ThinArgs),
    /// Columns property, coefficient conditions and colored solutions
    Rado(RadoArgs),
    /// Binary encodings of sets and the alternating-sum identity
    Encode(EncodeArgs),
    /// Enumerate colorings up to renaming and search for Erdős–Rado witnesses
    Oracle(OracleArgs),
    /// Excluded patterns with re-verified witness pairs
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    #[arg(long)]
    pub coloring: String,
    /// Values, inline or as a file
    #[arg(long)]
    pub values: String,
}

#[derive(Args, Debug)]
pub struct ProfileArgs {
    /// TAYLOR, T31, T42, T51, T61, T71 or T81
    #[arg(long)]
    pub profile: String,
    /// Arity of the sums (ignored by TAYLOR)
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Prefix length; defaults to the whole ground set
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub coloring: String,
    #[arg(long)]
    pub ground: String,
    #[command(flatten)]
    pub profile: ProfileArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ThinMethod {
    Interval,
    Residue,
    Star,
    Split,
    Focus,
}

#[derive(Args, Debug)]
pub struct ThinArgs {
    #[arg(long, value_enum)]
    pub method: ThinMethod,
    #[arg(long)]
    pub ground: String,
    /// Interval base (interval) or residue modulus root (residue)
    #[arg(long, default_value_t = 2)]
    pub base: u64,
    /// Prime for star, split and focus
    #[arg(long, default_value_t = 3)]
    pub p: u64,
    /// Requested length for star, split and focus
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    /// Focus on difference colors of pairs (2) or triples (3)
    #[arg(long, default_value_t = 2)]
    pub t: usize,
}

#[derive(Args, Debug)]
pub struct RadoArgs {
    /// Matrix: a file ("N M" then rows) or inline rows separated by ';'
    #[arg(long, required_unless_present = "ghl")]
    pub matrix: Option<String>,
    /// Classify a coefficient sequence instead of a matrix
    #[arg(long, conflicts_with = "matrix", allow_hyphen_values = true)]
    pub ghl: Option<String>,
    /// Search [1..N]^M for colored solutions
    #[arg(long, requires_all = ["coloring", "want"])]
    pub search: Option<u64>,
    /// Pattern verdict of one solution
    #[arg(long, requires = "coloring", conflicts_with = "search")]
    pub verdict: Option<String>,
    #[arg(long)]
    pub coloring: Option<String>,
    /// Pattern label i, ii or iii
    #[arg(long)]
    pub want: Option<String>,
    /// Cap on N^M for --search
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    /// Encode one set of exponents
    #[arg(long, conflicts_with = "blocks")]
    pub set: Option<String>,
    /// Block family: a file with one block per line, or inline blocks separated by ';'
    #[arg(long, required_unless_present = "set")]
    pub blocks: Option<String>,
    #[arg(long = "J", requires = "blocks")]
    pub j: Option<String>,
    /// Defaults to the parity of |J|
    #[arg(long, value_enum)]
    pub parity: Option<ParityArg>,
    /// Check the alternating-sum identity on J
    #[arg(long, requires = "j")]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Stop after this many colorings
    #[arg(long)]
    pub cap: Option<usize>,
    /// Run the Erdős–Rado search with support size M on every coloring
    #[arg(long)]
    pub er: Option<usize>,
    /// Emit one record per coloring
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[arg(long)]
    pub coloring: String,
    #[arg(long, required_unless_present = "thinned")]
    pub ground: Option<String>,
    /// Use the interval-rainbow thinned prefix for this base instead of --ground
    #[arg(long, conflicts_with = "ground")]
    pub thinned: Option<u64>,
    #[command(flatten)]
    pub profile: ProfileArgs,
}

/// One output line: ordered `key=value` fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record(pub Vec<(&'static str, String)>);

impl Record {
    fn with(mut self, key: &'static str, value: impl ToString) -> Self {
        self.0.push((key, value.to_string()));
        self
    }
}

pub enum Failure {
    Usage(String),
    Domain(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(m) => Failure::Domain(m),
            Error::Budget(m) => Failure::Budget(m),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Domain(e.0)
    }
}

/// Records plus an optional shortfall diagnostic.
pub struct Report {
    pub records: Vec<Record>,
    pub shortfall: Option<String>,
}

impl Report {
    fn of(records: Vec<Record>) -> Self {
        Report {
            records,
            shortfall: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn braces<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", list(items))
}

fn labels(ls: &[PatternLabel]) -> String {
    braces(ls.iter().map(|l| l.roman()))
}

fn ground_list(xs: &GroundSet) -> String {
    list(xs.values())
}

fn parse_profile(p: &ProfileArgs) -> Result<TheoremProfile, Failure> {
    Ok(TheoremProfile::parse(&p.profile, p.k)?)
}

fn prefix_len(p: &ProfileArgs, xs: &GroundSet) -> usize {
    p.n.unwrap_or(xs.len())
}

fn profile_record(profile: TheoremProfile, n: usize) -> Record {
    let r = Record::default().with("profile", profile.name());
    match profile.arity() {
        Some(k) => r.with("k", k),
        None => r,
    }
    .with("n", n)
}

pub fn color(a: &ColorArgs) -> Result<Report, Failure> {
    let spec = input::parse_coloring(&a.coloring)?;
    let values = input::parse_values(&a.values)?;
    let mut out = Vec::new();
    for x in values {
        let c = spec.eval(&x)?;
        out.push(Record::default().with("x", x).with("color", c));
    }
    Ok(Report::of(out))
}

pub fn classify(a: &ClassifyArgs) -> Result<Report, Failure> {
    let spec = input::parse_coloring(&a.coloring)?;
    let xs = input::parse_ground(&a.ground)?;
    let profile = parse_profile(&a.profile)?;
    let n = prefix_len(&a.profile, &xs);
    let v = classify_canonical(&spec, &xs, profile, n)?;
    let rec = profile_record(profile, n)
        .with("consistent", labels(&v.consistent))
        .with("excluded", labels(&v.excluded_labels()))
        .with("classes", v.observed_classes.len())
        .with("vacuous", v.vacuous);
    Ok(Report::of(vec![rec]))
}

fn shortfall(found: usize, m: usize) -> Option<String> {
    (found < m).then(|| format!("shortfall: found {found} of {m} requested elements"))
}

pub fn thin(a: &ThinArgs) -> Result<Report, Failure> {
    let xs = input::parse_ground(&a.ground)?;
    let base = Record::default().with("method", format!("{:?}", a.method).to_lowercase());
    Ok(match a.method {
        ThinMethod::Interval => {
            let out = thin_interval_rainbow(&xs, a.base)?;
            Report::of(vec![base.with("base", a.base).with("kept", ground_list(&out))])
        }
        ThinMethod::Residue => {
            let r = thin_residue(&xs, a.base)?;
            Report::of(vec![base
                .with("k", a.base)
                .with("d", r.d)
                .with("c", r.c)
                .with("kept", ground_list(&r.set))])
        }
        ThinMethod::Star => {
            let out = star_thin(&xs, a.p, a.m)?;
            let c = &out.certificate;
            let rec = base
                .with("p", c.p)
                .with("residue", c.common_residue)
                .with("valuations", list(&c.star_valuations))
                .with("z", ground_list(&c.z))
                .with("verified", c.verify())
                .with("shortfall", out.shortfall);
            Report {
                records: vec![rec],
                shortfall: shortfall(c.z.len(), a.m),
            }
        }
        ThinMethod::Split => {
            let s = split_case_ab(&xs, a.p, a.m)?;
            let case = match s.case {
                ValuationCase::Increasing => "a",
                ValuationCase::Constant => "b",
            };
            let rec = base
                .with("p", a.p)
                .with("case", case)
                .with("kept", ground_list(&s.set))
                .with("shortfall", s.shortfall);
            Report {
                records: vec![rec],
                shortfall: shortfall(s.set.len(), a.m),
            }
        }
        ThinMethod::Focus => {
            let p = a.p;
            let items = xs.values();
            let f = match a.t {
                2 => ramsey_focus(items, |s| eval_pair_coloring(p, s[0], s[1]).unwrap_or_default(), 2, a.m)?,
                3 => ramsey_focus(
                    items,
                    |s| eval_triple_coloring(p, s[0], s[1], s[2]).unwrap_or_default(),
                    3,
                    a.m,
                )?,
                _ => return Err(Failure::Usage("--t must be 2 or 3".into())),
            };
            // surface coloring errors (bad prime) before reporting
            eval_pair_coloring(p, &BigUint::from(1u32), &BigUint::from(2u32))?;
            let rec = base
                .with("p", p)
                .with("t", a.t)
                .with("kept", list(&f.items))
                .with("shortfall", f.shortfall);
            Report {
                records: vec![rec],
                shortfall: shortfall(f.items.len(), a.m),
            }
        }
    })
}

pub fn rado(a: &RadoArgs) -> Result<Report, Failure> {
    if let Some(seq) = &a.ghl {
        let coeffs = input::parse_ints(seq)?;
        let v = ghl_classify(&coeffs)?;
        let star = v.star_base.map_or_else(|| "none".to_string(), |c| c.to_string());
        let rec = Record::default()
            .with("cond_i", v.cond_i)
            .with("cond_ii", v.cond_ii)
            .with("cond_iii", v.cond_iii)
            .with("star_base", star);
        return Ok(Report::of(vec![rec]));
    }
    let m = input::parse_matrix(a.matrix.as_deref().unwrap_or_default())?;
    let part = columns_property(&m)?;
    let mut head = Record::default();
    match &part {
        Some(p) => {
            head = head.with("columns", "present");
            for (t, b) in p.blocks.iter().enumerate() {
                head.0.push((block_key(t), b.to_string()));
            }
        }
        None => head = head.with("columns", "absent"),
    }
    if m.n_rows() == 1 {
        let row: Option<Vec<i64>> = m.rows()[0]
            .iter()
            .map(|q| q.is_integer().then(|| i64::try_from(q.numer()).ok()).flatten())
            .collect();
        if let Some(row) = row {
            head = head.with("single_regular", single_equation_regular(&row));
        }
    }
    let mut records = vec![head];
    if let Some(y) = &a.verdict {
        let spec = input::parse_coloring(a.coloring.as_deref().unwrap_or_default())?;
        let y = input::parse_values(y)?;
        let part = part.ok_or_else(|| Failure::Domain("verdicts need a matrix with the columns property".into()))?;
        let v = canonical_rado_verdict(&m, &part, &y, &spec)?;
        records.push(
            Record::default()
                .with("y", format!("({})", list(&y)))
                .with("verdict", v.map_or("none", PatternLabel::roman)),
        );
    }
    if let Some(bound) = a.search {
        let spec = input::parse_coloring(a.coloring.as_deref().unwrap_or_default())?;
        let want = a
            .want
            .as_deref()
            .and_then(PatternLabel::parse)
            .filter(|l| *l <= PatternLabel::III);
        let want = want.ok_or_else(|| Failure::Usage("--want must be i, ii or iii".into()))?;
        let space = (bound as u128).checked_pow(m.n_cols() as u32).unwrap_or(u128::MAX);
        if space > a.budget as u128 {
            return Err(Failure::Budget(format!(
                "search space {bound}^{} exceeds the budget {}",
                m.n_cols(),
                a.budget
            )));
        }
        let sols = search_solutions(&m, bound, &spec, want)?;
        let count = sols.len();
        for y in sols {
            records.push(
                Record::default()
                    .with("y", format!("({})", list(y)))
                    .with("verdict", want.roman()),
            );
        }
        records.push(Record::default().with("solutions", count));
    }
    Ok(Report::of(records))
}

fn block_key(t: usize) -> &'static str {
    const KEYS: [&str; 13] = [
        "I0", "I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I11", "I12",
    ];
    KEYS[t.min(12)]
}

pub fn encode(a: &EncodeArgs) -> Result<Report, Failure> {
    if let Some(s) = &a.set {
        let set = input::parse_exponent_set(s)?;
        return Ok(Report::of(vec![Record::default()
            .with("set", braces(&set))
            .with("f", f_encode(&set)?)]));
    }
    let fam = input::parse_blocks(a.blocks.as_deref().unwrap_or_default())?;
    let Some(j) = &a.j else {
        return Ok(Report::of(vec![
            Record::default().with("x", ground_list(&blocks_to_x(&fam)))
        ]));
    };
    let j = input::parse_index_set(j)?;
    let parity = match a.parity {
        Some(ParityArg::Even) => Parity::Even,
        Some(ParityArg::Odd) => Parity::Odd,
        None => Parity::of(j.len()),
    };
    if a.verify {
        let r = verify_alt_identity(&fam, &j, parity)?;
        return Ok(Report::of(vec![Record::default()
            .with("equal", r.equal)
            .with("lhs", r.lhs)
            .with("rhs", r.rhs)]));
    }
    Ok(Report::of(vec![
        Record::default().with("j_alt", braces(j_alt(&j, parity)?))
    ]))
}

pub fn oracle(a: &OracleArgs) -> Result<Report, Failure> {
    let tables = enumerate_canonical_colorings(a.n, a.k, a.cap)?;
    let mut records = Vec::new();
    let (mut count, mut hits) = (0usize, 0usize);
    for t in tables {
        count += 1;
        let mut rec = Record::default().with("table", list(t.entries().map(|(_, c)| c.0[0])));
        if let Some(m) = a.er {
            match er_search(&t, m)? {
                Some(hit) => {
                    hits += 1;
                    rec = rec
                        .with("support", braces(&hit.support))
                        .with("positions", braces(&hit.positions));
                }
                None => rec = rec.with("support", "none"),
            }
        }
        if a.list {
            records.push(rec);
        }
    }
    let mut summary = Record::default().with("n", a.n).with("k", a.k).with("tables", count);
    if a.er.is_some() {
        summary = summary.with("er_hits", hits);
    }
    records.push(summary);
    Ok(Report::of(records))
}

pub fn witness(a: &WitnessArgs) -> Result<Report, Failure> {
    let spec = input::parse_coloring(&a.coloring)?;
    let profile = parse_profile(&a.profile)?;
    let xs = match (&a.ground, a.thinned) {
        (_, Some(base)) => {
            let n = a
                .profile
                .n
                .ok_or_else(|| Failure::Usage("--thinned needs --n".into()))?;
            thinned_interval_prefix(base, n)?
        }
        (Some(g), None) => input::parse_ground(g)?,
        (None, None) => return Err(Failure::Usage("give --ground or --thinned".into())),
    };
    let n = prefix_len(&a.profile, &xs);
    let r = witness_exclusion_report(&spec, &xs, profile, n)?;
    let mut records = Vec::new();
    for (label, w) in &r.excluded {
        records.push(
            Record::default()
                .with("label", label.roman())
                .with("clause", w.clause.describe())
                .with("left", &w.left)
                .with("right", &w.right)
                .with("left_color", &w.left_color)
                .with("right_color", &w.right_color),
        );
    }
    records.push(
        profile_record(profile, n)
            .with("ground", ground_list(&xs.prefix(n)))
            .with("consistent", labels(&r.consistent))
            .with("excluded", labels(&r.excluded_labels())),
    );
    Ok(Report::of(records))
}

pub fn execute(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Color(a) => color(a),
        Command::Classify(a) => classify(a),
        Command::Thin(a) => thin(a),
        Command::Rado(a) => rado(a),
        Command::Encode(a) => encode(a),
        Command::Oracle(a) => oracle(a),
        Command::Witness(a) => witness(a),
    }
}

pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        match format {
            Format::Records => {
                let fields: Vec<String> = r.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "{}", fields.join(" "));
            }
            Format::Human => {
                if i > 0 {
                    out.push('\n');
                }
                let width = r.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &r.0 {
                    let _ = writeln!(out, "{k:>width$}  {v}");
                }
            }
        }
    }
    out
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = render(&report.records, cli.format);
            match report.shortfall {
                Some(msg) => Outcome {
                    code: 2,
                    stdout,
                    stderr: format!("canonsum: {msg}\n"),
                },
                None => Outcome {
                    code: 0,
                    stdout,
                    stderr: String::new(),
                },
            }
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (1, format!("usage error: {m}")),
                Failure::Domain(m) => (1, format!("error: {m}")),
                Failure::Budget(m) => (2, format!("budget exceeded: {m}")),
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("canonsum: {msg}\n"),
            }
        }
    }
}
