"""Label interning: strings to dense integer ids, shared across a profile."""


class LabelTable:
    """Bijection between label strings and dense non-negative ids.

    Ids are assigned in first-seen order.  Synthetic labels (created while
    filling in unlabeled nodes) are flagged so they can be stripped from
    output trees later; their names never collide with user labels.
    """

    def __init__(self):
        self.names = []
        self.synthetic = []
        self._index = {}
        self._synth_counter = 0

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def intern(self, name):
        """Return the id for name, adding it if unseen."""
        idx = self._index.get(name)
        if idx is None:
            idx = len(self.names)
            self._index[name] = idx
            self.names.append(name)
            self.synthetic.append(False)
        return idx

    def id_of(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("unknown label %r" % name) from None

    def name_of(self, label_id):
        return self.names[label_id]

    def is_synthetic(self, label_id):
        return self.synthetic[label_id]

    def fresh_synthetic(self):
        """Mint a new synthetic label, skipping any user-taken names."""
        while True:
            name = "_s%d" % self._synth_counter
            self._synth_counter += 1
            if name not in self._index:
                break
        idx = len(self.names)
        self._index[name] = idx
        self.names.append(name)
        self.synthetic.append(True)
        return idx

    def synthetic_ids(self):
        return {i for i, s in enumerate(self.synthetic) if s}
