//! Verb stemming.
//!
//! [`RuleStemmer`] strips `-ing`, `-ed` and `-s`/`-es` with consonant
//! undoubling and final-`e` restoration, after consulting a table of
//! irregular and protected forms. Suffix stripping is repeated until nothing
//! changes; every rule shortens the word, so this terminates, and the result
//! is always a fixed point of the stemmer.

pub trait Stemmer: Send + Sync {
    fn stem(&self, word: &str) -> String;
}

/// Returns the word unchanged.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityStemmer;

impl Stemmer for IdentityStemmer {
    fn stem(&self, word: &str) -> String {
        word.to_string()
    }
}

/// Rule-based English verb stemmer.
#[derive(Debug, Clone, Copy, Default)]
pub struct RuleStemmer;

impl Stemmer for RuleStemmer {
    fn stem(&self, word: &str) -> String {
        // Only plain lowercase words; numerals, names and mixed tokens pass
        // through untouched.
        if !word.bytes().all(|b| b.is_ascii_lowercase() || b == b'-') {
            return word.to_string();
        }
        let mut w = word.to_string();
        loop {
            if let Some(base) = lookup(&w) {
                return base.to_string();
            }
            match strip_suffix_once(&w) {
                Some(next) => w = next,
                None => return w,
            }
        }
    }
}

// (form, base). Bases map to themselves where a suffix rule would otherwise
// mangle them.
#[rustfmt::skip]
const IRREGULAR: &[(&str, &str)] = &[
    ("am", "be"), ("is", "be"), ("are", "be"), ("was", "be"), ("were", "be"),
    ("been", "be"), ("being", "be"),
    ("has", "have"), ("had", "have"), ("having", "have"),
    ("does", "do"), ("did", "do"), ("done", "do"),
    ("goes", "go"), ("went", "go"), ("gone", "go"),
    ("said", "say"),
    ("made", "make"),
    ("took", "take"), ("taken", "take"),
    ("got", "get"), ("gotten", "get"),
    ("gave", "give"), ("given", "give"),
    ("sold", "sell"),
    ("bought", "buy"),
    ("brought", "bring"),
    ("thought", "think"),
    ("saw", "see"), ("seen", "see"),
    ("came", "come"),
    ("became", "become"), ("becoming", "become"),
    ("ran", "run"),
    ("held", "hold"),
    ("kept", "keep"),
    ("left", "leave"),
    ("paid", "pay"),
    ("sent", "send"),
    ("spent", "spend"),
    ("built", "build"),
    ("found", "find"),
    ("told", "tell"),
    ("knew", "know"), ("known", "know"),
    ("grew", "grow"), ("grown", "grow"),
    ("rose", "rise"), ("risen", "rise"),
    ("fell", "fall"), ("fallen", "fall"),
    ("wrote", "write"), ("written", "write"),
    ("lost", "lose"),
    ("won", "win"),
    ("began", "begin"), ("begun", "begin"),
    ("met", "meet"),
    ("stood", "stand"),
    ("understood", "understand"),
    ("withstood", "withstand"),
    ("lent", "lend"),
    ("meant", "mean"),
    ("felt", "feel"),
    ("dealt", "deal"),
    ("drew", "draw"), ("drawn", "draw"),
    ("withdrew", "withdraw"), ("withdrawn", "withdraw"),
    ("drove", "drive"), ("driven", "drive"),
    ("ate", "eat"), ("eaten", "eat"),
    ("flew", "fly"), ("flown", "fly"),
    ("forgot", "forget"), ("forgotten", "forget"),
    ("forgave", "forgive"), ("forgiven", "forgive"),
    ("forbade", "forbid"), ("forbidden", "forbid"),
    ("heard", "hear"),
    ("chose", "choose"), ("chosen", "choose"),
    ("shook", "shake"), ("shaken", "shake"),
    ("struck", "strike"), ("stricken", "strike"),
    ("stole", "steal"), ("stolen", "steal"),
    ("threw", "throw"), ("thrown", "throw"),
    ("wore", "wear"), ("worn", "wear"),
    ("swore", "swear"), ("sworn", "swear"),
    ("tore", "tear"), ("torn", "tear"),
    ("bore", "bear"), ("borne", "bear"),
    ("undertook", "undertake"), ("undertaken", "undertake"),
    ("overtook", "overtake"), ("overtaken", "overtake"),
    ("oversaw", "oversee"), ("overseen", "oversee"),
    ("foresaw", "foresee"), ("foreseen", "foresee"),
    ("overcame", "overcome"), ("overcoming", "overcome"),
    ("sought", "seek"),
    ("taught", "teach"),
    ("caught", "catch"),
    ("fought", "fight"),
    ("sank", "sink"), ("sunk", "sink"),
    ("swung", "swing"),
    ("hung", "hang"),
    ("laid", "lay"),
    ("sat", "sit"),
    ("slept", "sleep"),
    ("swept", "sweep"),
    ("lit", "light"),
    ("spoke", "speak"), ("spoken", "speak"),
    ("broke", "break"), ("broken", "break"),
    ("froze", "freeze"), ("frozen", "freeze"),
    ("rode", "ride"), ("ridden", "ride"),
    ("hid", "hide"), ("hidden", "hide"),
    ("shot", "shoot"),
    ("led", "lead"),
    ("misled", "mislead"),
    ("fed", "feed"),
    ("fled", "flee"),
    ("bred", "breed"),
    ("sped", "speed"),
    ("bled", "bleed"),
    ("shown", "show"),
    ("woven", "weave"), ("wove", "weave"),
    ("arose", "arise"), ("arisen", "arise"),
    ("slid", "slide"),
    ("woke", "wake"), ("woken", "wake"),
    ("shone", "shine"),
    ("shrank", "shrink"), ("shrunk", "shrink"),
    ("sprang", "spring"), ("sprung", "spring"),
    ("sang", "sing"), ("sung", "sing"),
    ("drank", "drink"), ("drunk", "drink"),
    ("rang", "ring"), ("rung", "ring"),
    ("swam", "swim"), ("swum", "swim"),
    ("dug", "dig"),
    ("stuck", "stick"),
    ("spun", "spin"),
    ("beaten", "beat"),
    ("dying", "die"), ("lying", "lie"), ("tying", "tie"),
    ("added", "add"), ("adding", "add"), ("adds", "add"),
    ("erred", "err"), ("erring", "err"),
    ("focused", "focus"), ("focusing", "focus"), ("focuses", "focus"),
    ("focussed", "focus"), ("focussing", "focus"),
    ("biased", "bias"), ("biases", "bias"),
    ("guided", "guide"), ("guiding", "guide"),
    ("agreed", "agree"), ("guaranteed", "guarantee"), ("freed", "free"),
    ("decreed", "decree"), ("refereed", "referee"),
    ("created", "create"), ("creating", "create"),
    ("completed", "complete"), ("completing", "complete"),
    ("competed", "compete"), ("competing", "compete"),
    ("deleted", "delete"), ("deleting", "delete"),
    ("promoted", "promote"), ("promoting", "promote"),
    ("devoted", "devote"), ("devoting", "devote"),
    ("quoted", "quote"), ("quoting", "quote"),
    ("restored", "restore"), ("restoring", "restore"),
    ("ignored", "ignore"), ("ignoring", "ignore"),
    ("explored", "explore"), ("exploring", "explore"),
    ("wasted", "waste"), ("wasting", "waste"),
    ("pasted", "paste"), ("pasting", "paste"),
    ("tasted", "taste"), ("tasting", "taste"),
    ("typed", "type"), ("typing", "type"),
    ("owed", "owe"), ("owing", "owe"),
    ("welcomed", "welcome"), ("welcoming", "welcome"),
    ("postponed", "postpone"), ("postponing", "postpone"),
    ("invited", "invite"), ("inviting", "invite"),
    ("excited", "excite"), ("exciting", "excite"),
    ("united", "unite"), ("uniting", "unite"),
    ("ignited", "ignite"), ("igniting", "ignite"),
    // Protected bases.
    ("be", "be"), ("embed", "embed"), ("shed", "shed"), ("wed", "wed"),
    ("bed", "bed"), ("red", "red"), ("shred", "shred"), ("need", "need"),
    ("feed", "feed"), ("speed", "speed"), ("breed", "breed"), ("bleed", "bleed"),
    ("focus", "focus"), ("bias", "bias"), ("add", "add"), ("err", "err"),
];

fn lookup(w: &str) -> Option<&'static str> {
    IRREGULAR
        .iter()
        .find(|(form, _)| *form == w)
        .map(|(_, base)| *base)
}

fn is_vowel_at(b: &[u8], i: usize) -> bool {
    match b[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => true,
        b'y' => i > 0 && !is_vowel_at(b, i - 1),
        _ => false,
    }
}

fn is_consonant_at(b: &[u8], i: usize) -> bool {
    b[i].is_ascii_lowercase() && !is_vowel_at(b, i)
}

fn has_vowel(s: &str) -> bool {
    let b = s.as_bytes();
    (0..b.len()).any(|i| is_vowel_at(b, i))
}

fn vowel_groups(s: &str) -> usize {
    let b = s.as_bytes();
    (0..b.len())
        .filter(|&i| is_vowel_at(b, i) && (i == 0 || !is_vowel_at(b, i - 1)))
        .count()
}

fn strip_suffix_once(w: &str) -> Option<String> {
    let n = w.len();
    if let Some(stem) = w.strip_suffix("ies") {
        return Some(if n > 4 {
            format!("{stem}y")
        } else {
            w[..n - 1].to_string()
        });
    }
    if let Some(stem) = w.strip_suffix("ied") {
        return Some(if n > 4 {
            format!("{stem}y")
        } else {
            w[..n - 1].to_string()
        });
    }
    if let Some(stem) = w.strip_suffix("ing") {
        return (stem.len() >= 2 && has_vowel(stem)).then(|| restore(stem));
    }
    if w.ends_with("eed") {
        return None;
    }
    if let Some(stem) = w.strip_suffix("ed") {
        return (stem.len() >= 2 && has_vowel(stem)).then(|| restore(stem));
    }
    if w.ends_with('s') {
        if ["ss", "us", "is", "as"].iter().any(|s| w.ends_with(s)) {
            return None;
        }
        if ["sses", "shes", "ches", "xes", "zzes", "oes"]
            .iter()
            .any(|s| w.ends_with(s))
        {
            return Some(w[..n - 2].to_string());
        }
        let stem = &w[..n - 1];
        return (stem.len() >= 2 && has_vowel(stem)).then(|| stem.to_string());
    }
    None
}

/// Repairs a stem left after removing `-ing` or `-ed`.
fn restore(stem: &str) -> String {
    let b = stem.as_bytes();
    let n = b.len();
    if n >= 3 && b[n - 1] == b[n - 2] && is_consonant_at(b, n - 1) {
        let undouble = match b[n - 1] {
            b's' | b'z' | b'f' => false,
            b'l' => vowel_groups(stem) >= 2 && b[n - 3] != b'a',
            _ => true,
        };
        return if undouble {
            stem[..n - 1].to_string()
        } else {
            stem.to_string()
        };
    }
    if needs_final_e(stem) {
        format!("{stem}e")
    } else {
        stem.to_string()
    }
}

fn needs_final_e(s: &str) -> bool {
    let b = s.as_bytes();
    let n = b.len();
    if n < 2 {
        return false;
    }
    let last = b[n - 1];
    let prev = b[n - 2];
    let cons = |i: usize| is_consonant_at(b, i);
    let multi = vowel_groups(s) >= 2;

    // Short consonant-vowel-consonant words: hop -> hope, vot -> vote.
    if n >= 3
        && vowel_groups(s) == 1
        && cons(n - 3)
        && matches!(prev, b'a' | b'e' | b'i' | b'o' | b'u')
        && cons(n - 1)
        && !matches!(last, b'w' | b'x' | b'y')
    {
        return true;
    }
    match last {
        b'v' | b'u' | b'c' => return true,
        b'z' => return prev != b'z',
        b's' => {
            return is_vowel_at(b, n - 2) || matches!(prev, b'n' | b'r' | b'l' | b'p');
        }
        b'l' => {
            if matches!(prev, b'b' | b'c' | b'd' | b'f' | b'g' | b'k' | b'p' | b't' | b'z') {
                return true;
            }
        }
        b'g' => {
            if matches!(prev, b'r' | b'd' | b'a' | b'l') {
                return true;
            }
            if prev == b'i' && multi {
                return true;
            }
            if s.ends_with("ang") && n >= 5 {
                return true;
            }
        }
        _ => {}
    }
    if n < 3 {
        return false;
    }
    let before = b[n - 3];
    let before_cons = cons(n - 3);
    match (prev, last) {
        (b'a', b't') => multi && (before_cons || before == b'i' || before == b'u'),
        (b'u', b't')
        | (b'a', b'r')
        | (b'i', b'n')
        | (b'u', b'm')
        | (b'i', b'd')
        | (b'u', b'd')
        | (b'o', b'd')
        | (b'i', b'b')
        | (b'a', b'p')
        | (b'i', b'l') => multi && before_cons,
        (b'i', b'r') => before_cons || before == b'u',
        (b'u', b'r') | (b'a', b'k') | (b'o', b'k') => before_cons,
        _ => false,
    }
}
