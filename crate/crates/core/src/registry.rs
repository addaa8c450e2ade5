//! Name-keyed registry of interchangeable strategies.

use std::collections::BTreeMap;

/// Holds boxed strategy objects under stable names. Iteration follows
/// insertion order so listings are deterministic.
pub struct Registry<T: ?Sized> {
    order: Vec<String>,
    entries: BTreeMap<String, Box<T>>,
}

impl<T: ?Sized> Default for Registry<T> {
    fn default() -> Self {
        Registry { order: Vec::new(), entries: BTreeMap::new() }
    }
}

impl<T: ?Sized> Registry<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `item` under `name`, replacing any previous entry.
    pub fn register(&mut self, name: &str, item: Box<T>) {
        if self.entries.insert(name.to_string(), item).is_none() {
            self.order.push(name.to_string());
        }
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries.get(name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.order.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Greeter {
        fn greet(&self) -> String;
    }

    struct Toki;
    impl Greeter for Toki {
        fn greet(&self) -> String {
            "toki".into()
        }
    }

    #[test]
    fn register_and_lookup() {
        let mut reg: Registry<dyn Greeter> = Registry::new();
        reg.register("toki", Box::new(Toki));
        reg.register("toki", Box::new(Toki));
        assert_eq!(reg.len(), 1);
        assert_eq!(reg.get("toki").unwrap().greet(), "toki");
        assert!(reg.get("hello").is_none());
    }
}
