//! The spine as a doubly linked list of slots, so that "directly to the
//! left/right of x" never renumbers anything. Positions are only compacted
//! when asked for.

use alloc::vec;
use alloc::vec::Vec;

/// Something occupying a spine slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Item {
    Vertex(usize),
    /// A block-vertex not yet expanded (index into the embedder's token table).
    Token(usize),
}

const NIL: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Node {
    item: Item,
    prev: usize,
    next: usize,
    alive: bool,
}

#[derive(Debug, Clone)]
pub struct Spine {
    nodes: Vec<Node>,
    head: usize,
    tail: usize,
    vertex_node: Vec<usize>,
    len: usize,
}

impl Spine {
    pub fn new(n: usize) -> Self {
        Spine {
            nodes: Vec::new(),
            head: NIL,
            tail: NIL,
            vertex_node: vec![NIL; n],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn alloc(&mut self, item: Item) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node {
            item,
            prev: NIL,
            next: NIL,
            alive: true,
        });
        if let Item::Vertex(v) = item {
            assert_eq!(self.vertex_node[v], NIL, "vertex {v} placed twice");
            self.vertex_node[v] = id;
        }
        self.len += 1;
        id
    }

    pub fn push_back(&mut self, item: Item) -> usize {
        let id = self.alloc(item);
        self.nodes[id].prev = self.tail;
        if self.tail != NIL {
            self.nodes[self.tail].next = id;
        } else {
            self.head = id;
        }
        self.tail = id;
        id
    }

    pub fn insert_after(&mut self, at: usize, item: Item) -> usize {
        let id = self.alloc(item);
        let next = self.nodes[at].next;
        self.nodes[id].prev = at;
        self.nodes[id].next = next;
        self.nodes[at].next = id;
        if next != NIL {
            self.nodes[next].prev = id;
        } else {
            self.tail = id;
        }
        id
    }

    pub fn insert_before(&mut self, at: usize, item: Item) -> usize {
        let prev = self.nodes[at].prev;
        if prev != NIL {
            return self.insert_after(prev, item);
        }
        let id = self.alloc(item);
        self.nodes[id].next = at;
        self.nodes[at].prev = id;
        self.head = id;
        id
    }

    pub fn remove(&mut self, at: usize) {
        let Node { prev, next, .. } = self.nodes[at];
        if prev != NIL {
            self.nodes[prev].next = next;
        } else {
            self.head = next;
        }
        if next != NIL {
            self.nodes[next].prev = prev;
        } else {
            self.tail = prev;
        }
        if let Item::Vertex(v) = self.nodes[at].item {
            self.vertex_node[v] = NIL;
        }
        self.nodes[at].alive = false;
        self.len -= 1;
    }

    pub fn item(&self, node: usize) -> Item {
        self.nodes[node].item
    }

    pub fn next(&self, node: usize) -> Option<usize> {
        Some(self.nodes[node].next).filter(|&x| x != NIL)
    }

    pub fn prev(&self, node: usize) -> Option<usize> {
        Some(self.nodes[node].prev).filter(|&x| x != NIL)
    }

    pub fn node_of(&self, v: usize) -> Option<usize> {
        Some(self.vertex_node[v]).filter(|&x| x != NIL)
    }

    pub fn is_placed(&self, v: usize) -> bool {
        self.vertex_node[v] != NIL
    }

    pub fn is_alive(&self, node: usize) -> bool {
        self.nodes[node].alive
    }

    /// Items from left to right.
    pub fn items(&self) -> Vec<Item> {
        let mut out = Vec::with_capacity(self.len);
        let mut cur = self.head;
        while cur != NIL {
            out.push(self.nodes[cur].item);
            cur = self.nodes[cur].next;
        }
        out
    }

    /// Nodes from `from` to `to` inclusive (walking right).
    pub fn range(&self, from: usize, to: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = from;
        loop {
            out.push(cur);
            if cur == to {
                break;
            }
            cur = self.nodes[cur].next;
            assert!(cur != NIL, "range end not to the right of start");
        }
        out
    }

    /// Rank of every live node in left-to-right order (`usize::MAX` for dead
    /// nodes).
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![usize::MAX; self.nodes.len()];
        let mut cur = self.head;
        let mut i = 0;
        while cur != NIL {
            rank[cur] = i;
            i += 1;
            cur = self.nodes[cur].next;
        }
        rank
    }

    /// Final vertex order; panics if a token is still unexpanded.
    pub fn vertex_order(&self) -> Vec<usize> {
        self.items()
            .into_iter()
            .map(|it| match it {
                Item::Vertex(v) => v,
                Item::Token(t) => panic!("token {t} left on the spine"),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertions_keep_order() {
        let mut s = Spine::new(5);
        let a = s.push_back(Item::Vertex(0));
        let c = s.push_back(Item::Vertex(2));
        s.insert_after(a, Item::Vertex(1));
        s.insert_before(a, Item::Vertex(3));
        let t = s.insert_after(c, Item::Token(0));
        s.insert_before(t, Item::Vertex(4));
        s.remove(t);
        assert_eq!(s.vertex_order(), vec![3, 0, 1, 2, 4]);
        assert_eq!(s.len(), 5);
        let r = s.ranks();
        assert_eq!(r[s.node_of(2).unwrap()], 3);
    }
}
