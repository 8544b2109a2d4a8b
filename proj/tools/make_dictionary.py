import wordfreq
from english_words import get_english_words_set
base = {w for w in get_english_words_set(['web2'], lower=False) if w[:1].islower()}
base |= {w for w in get_english_words_set(['gcide'], lower=False) if w[:1].islower()}
def forms(w):
    yield w
    for suf, rep in [("s",""),("es",""),("ies","y"),("ed",""),("ed","e"),("ied","y"),("ing",""),("ing","e"),("ly",""),("er",""),("est",""),("ers",""),("'s","")]:
        if w.endswith(suf) and len(w) > len(suf) + 2:
            stem = w[: -len(suf)] + rep
            yield stem
            if rep == "" and len(stem) > 2 and stem[-1] == stem[-2]:
                yield stem[:-1]
out = []
for w in wordfreq.top_n_list('en', 80000):
    if not w.isascii():
        continue
    if not all(c.isalpha() or c == "'" for c in w):
        continue
    if any(f in base for f in forms(w)) or ("'" in w and w.split("'")[0] in base):
        out.append(w)
out = sorted(set(out))
print(len(out))
open('/tmp/dictionary.txt','w').write('\n'.join(out) + '\n')
