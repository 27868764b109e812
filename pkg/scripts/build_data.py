#!/usr/bin/env python3
"""Regenerate the bundled lexicon tables and the toy review dataset.

Everything under src/assoctext/data/ is produced by this script so the
shipped files can be rebuilt offline. Frequencies are hand-curated ranks
for a small lexicon, not corpus counts. Run from the repo root:

    python scripts/build_data.py
"""
import math
import random
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "src" / "assoctext" / "data"
BUNDLE = OUT / "bundle"
TOY = OUT / "toy"

# ---------------------------------------------------------------------------
# Character readings (toneless pinyin, rank-1 first).
# ---------------------------------------------------------------------------

PINYIN = {
    # fixture words and their pieces
    "幼": ["you"], "稚": ["zhi"], "拿": ["na"], "衣": ["yi"], "服": ["fu"],
    "好": ["hao"], "号": ["hao"], "郝": ["hao"],
    "牛": ["niu"], "逼": ["bi"], "特": ["te"], "喵": ["miao"], "的": ["de", "di"],
    "他": ["ta"], "她": ["ta"], "它": ["ta"], "妈": ["ma"], "马": ["ma"], "吗": ["ma"],
    "快": ["kuai"], "块": ["kuai"], "发": ["fa"], "思": ["si"], "四": ["si"],
    "斯": ["si"], "辛": ["xin"], "苦": ["ku"], "刑": ["xing"], "幸": ["xing"],
    "莘": ["shen", "xin"], "日": ["ri"], "曰": ["yue"], "月": ["yue"],
    "女": ["nv"], "子": ["zi"], "禾": ["he"], "隹": ["zhui"], "幺": ["yao"],
    "力": ["li"], "务": ["wu"], "目": ["mu"], "白": ["bai"],
    # transliteration inventory
    "奈": ["nai"], "耐": ["nai"], "古": ["gu"], "巴": ["ba"], "维": ["wei"],
    "酷": ["ku"], "咖": ["ka"], "卡": ["ka"], "啡": ["fei"], "非": ["fei"],
    "德": ["de"], "迪": ["di"], "塞": ["sai", "se"], "色": ["se"],
    # toy-dataset vocabulary
    "很": ["hen"], "常": ["chang"], "真": ["zhen"], "比": ["bi"], "较": ["jiao"],
    "太": ["tai"], "味": ["wei"], "道": ["dao"], "速": ["su"], "度": ["du"],
    "质": ["zhi"], "量": ["liang"], "价": ["jia"], "格": ["ge"], "环": ["huan"],
    "境": ["jing"], "态": ["tai"], "物": ["wu"], "流": ["liu"], "包": ["bao"],
    "装": ["zhuang"], "口": ["kou"], "感": ["gan"], "不": ["bu"], "错": ["cuo"],
    "新": ["xin"], "鲜": ["xian"], "干": ["gan"], "净": ["jing"], "满": ["man"],
    "意": ["yi"], "实": ["shi"], "惠": ["hui"], "贴": ["tie"], "心": ["xin"],
    "周": ["zhou"], "到": ["dao"], "吃": ["chi"], "差": ["cha", "chai"],
    "慢": ["man"], "贵": ["gui"], "脏": ["zang"], "难": ["nan"], "糟": ["zao"],
    "糕": ["gao"], "失": ["shi"], "望": ["wang"], "恶": ["e", "wu"], "过": ["guo"],
    "期": ["qi"], "敷": ["fu"], "衍": ["yan"], "推": ["tui"], "荐": ["jian"],
    "下": ["xia"], "次": ["ci"], "还": ["hai", "huan"], "来": ["lai"],
    "无": ["wu"], "语": ["yu"], "了": ["le", "liao"], "再": ["zai"], "也": ["ye"],
    "今": ["jin"], "天": ["tian"], "递": ["di"], "员": ["yuan"], "送": ["song"],
    "货": ["huo"], "店": ["dian"], "家": ["jia"], "老": ["lao"], "板": ["ban"],
    "菜": ["cai"], "品": ["pin"], "值": ["zhi"], "得": ["de", "dei"],
    "点": ["dian"], "赞": ["zan"], "评": ["ping"], "退": ["tui"], "换": ["huan"],
    "垃": ["la"], "圾": ["ji"], "骗": ["pian"], "人": ["ren"], "坑": ["keng"],
    "一": ["yi"], "以": ["yi"], "已": ["yi"], "易": ["yi"], "这": ["zhe"],
    "们": ["men"], "是": ["shi"], "有": ["you"], "右": ["you"], "油": ["you"],
    "知": ["zhi"], "之": ["zhi"], "志": ["zhi"], "附": ["fu"], "付": ["fu"],
    "福": ["fu"], "哈": ["ha"], "和": ["he", "huo"], "河": ["he"],
    "没": ["mei"], "美": ["mei"], "每": ["mei"], "门": ["men"],
    "明": ["ming"], "名": ["ming"], "木": ["mu"], "土": ["tu"], "士": ["shi"],
    "夭": ["yao"], "入": ["ru"], "八": ["ba"], "大": ["da"], "犬": ["quan"],
    "本": ["ben"], "术": ["shu"], "于": ["yu"], "千": ["qian"], "己": ["ji"],
    "巳": ["si"], "未": ["wei"], "末": ["mo"], "爪": ["zhua"], "瓜": ["gua"],
    "贝": ["bei"], "见": ["jian"], "若": ["ruo"], "报": ["bao"], "休": ["xiu"],
    "什": ["shen", "shi"], "位": ["wei"], "立": ["li"], "十": ["shi"],
    "如": ["ru"], "始": ["shi"], "台": ["tai"], "村": ["cun"], "寸": ["cun"],
    "忙": ["mang"], "亡": ["wang"], "夬": ["guai"], "曼": ["man"],
    "钱": ["qian"], "昔": ["xi"], "戋": ["jian"], "又": ["you"], "扁": ["bian"],
    "庄": ["zhuang"], "米": ["mi"], "曹": ["cao"], "加": ["jia"],
    "亻": ["ren"], "忄": ["xin"], "钅": ["jin"], "林": ["lin"],
    "羞": ["xiu"], "养": ["yang"], "漫": ["man"], "决": ["jue"],
    "嘛": ["ma"], "买": ["mai"], "卖": ["mai"], "上": ["shang"],
    "义": ["yi"], "予": ["yu"], "余": ["yu"], "你": ["ni"], "分": ["fen"],
    "吧": ["ba"], "宇": ["yu"], "尝": ["chang"], "尼": ["ni"], "愚": ["yu"],
    "我": ["wo"], "泥": ["ni"], "渔": ["yu"], "玉": ["yu"], "益": ["yi"],
    "羽": ["yu"], "雨": ["yu"], "饭": ["fan"], "鱼": ["yu"],
}

# ---------------------------------------------------------------------------
# Left-right character disassembly. Values must be unique (inverse lookup).
# ---------------------------------------------------------------------------

DISASSEMBLY = {
    "幼": "幺力",
    "稚": "禾隹",
    "好": "女子",
    "明": "日月",
    "林": "木木",
    "休": "亻木",
    "们": "亻门",
    "什": "亻十",
    "位": "亻立",
    "味": "口未",
    "吗": "口马",
    "和": "禾口",
    "如": "女口",
    "始": "女台",
    "村": "木寸",
    "快": "忄夬",
    "慢": "忄曼",
    "忙": "忄亡",
    "错": "钅昔",
    "钱": "钅戋",
    "难": "又隹",
    "骗": "马扁",
    "脏": "月庄",
    "糟": "米曹",
    "啡": "口非",
    "咖": "口加",
}

# ---------------------------------------------------------------------------
# Word -> English translations (first entry is rank-1).
# ---------------------------------------------------------------------------

TRANSLATIONS = {
    "幼稚": ["naive", "childish"],
    "快": ["fast", "quick"],
    "好": ["good", "nice"],
    "牛逼": ["awesome"],
    "不错": ["not bad", "good"],
    "服务": ["service"],
    "速度": ["speed"],
    "味道": ["taste"],
    "价格": ["price"],
    "质量": ["quality"],
    "差": ["bad", "poor"],
    "慢": ["slow"],
    "贵": ["expensive"],
    "干净": ["clean"],
    "新鲜": ["fresh"],
    "满意": ["satisfied"],
    "失望": ["disappointed"],
    "难吃": ["awful"],
    "好吃": ["delicious", "yummy"],
    "糟糕": ["terrible"],
    "环境": ["environment"],
    "老板": ["boss"],
    "垃圾": ["garbage", "trash"],
    "辛苦": ["hard"],
    "酷": ["cool"],
    "咖啡": ["coffee"],
}

# ---------------------------------------------------------------------------
# English pronunciations as onset+rime unit clusters, and the unit -> pinyin
# syllable map used for transliteration.
# ---------------------------------------------------------------------------

PHONEMES = {
    "naive": ["NAY", "IY", "V"],
    "nice": ["NAY", "S"],
    "fast": ["FAE", "S", "T"],
    "good": ["GUH", "D"],
    "bad": ["BAE", "D"],
    "cool": ["KUW"],
    "coffee": ["KAA", "FIY"],
}

PHONEME_MAP = {
    "NAY": ["na", "nai"],
    "IY": ["yi"],
    "V": ["fu", "wei"],
    "FAE": ["fa"],
    "S": ["si", "se"],
    "T": ["te"],
    "GUH": ["gu"],
    "D": ["de", "di"],
    "BAE": ["ba"],
    "KUW": ["ku"],
    "KAA": ["ka"],
    "FIY": ["fei"],
}

# ---------------------------------------------------------------------------
# Visually confusable characters with similarity scores (descending).
# ---------------------------------------------------------------------------

VISUAL = {
    "日": [("曰", 0.95), ("目", 0.78), ("白", 0.72)],
    "曰": [("日", 0.95)],
    "辛": [("刑", 0.88), ("幸", 0.85), ("莘", 0.80)],
    "幸": [("辛", 0.85)],
    "快": [("块", 0.86), ("决", 0.62)],
    "块": [("快", 0.86)],
    "慢": [("漫", 0.84), ("曼", 0.70)],
    "差": [("羞", 0.66), ("养", 0.60)],
    "土": [("士", 0.93)],
    "士": [("土", 0.93)],
    "天": [("夭", 0.92), ("无", 0.60)],
    "夭": [("天", 0.92)],
    "人": [("入", 0.90), ("八", 0.62)],
    "大": [("太", 0.88), ("犬", 0.85)],
    "太": [("大", 0.88)],
    "木": [("术", 0.85), ("本", 0.80), ("禾", 0.75)],
    "禾": [("木", 0.75)],
    "干": [("千", 0.85), ("于", 0.80)],
    "千": [("干", 0.85)],
    "己": [("已", 0.95), ("巳", 0.90)],
    "已": [("己", 0.95)],
    "未": [("末", 0.95)],
    "末": [("未", 0.95)],
    "爪": [("瓜", 0.80)],
    "贝": [("见", 0.82)],
    "苦": [("若", 0.78)],
}

# ---------------------------------------------------------------------------
# Vocabulary with curated frequencies. Single-character entries drive the
# hanzify ranking; multi-character entries drive segmentation.
# ---------------------------------------------------------------------------

VOCAB = {
    # single characters (hanzify / fuzzy ranking)
    "的": 9900, "好": 9000, "他": 9500, "妈": 5000, "马": 3000, "吗": 2500,
    "她": 4000, "它": 3000, "特": 3000, "喵": 1200, "拿": 3000, "那": 0,
    "衣": 5000, "一": 4000, "以": 2500, "意": 2000, "已": 1200, "易": 800,
    "服": 3000, "福": 1000, "付": 800, "附": 500, "发": 5000, "思": 2000,
    "四": 1800, "斯": 900, "古": 800, "巴": 1500, "维": 1200, "酷": 900,
    "咖": 900, "卡": 700, "啡": 600, "非": 1400, "德": 700, "迪": 400,
    "奈": 500, "耐": 400, "得": 3000, "是": 9800, "有": 9600, "人": 9400,
    "了": 9700, "不": 9500, "这": 8000, "们": 4000, "也": 7000, "太": 2200,
    "很": 6000, "快": 4500, "慢": 1800, "差": 1600, "贵": 1500, "号": 500,
    "郝": 50, "牛": 2000, "逼": 900, "口": 2600, "心": 3200, "天": 3500,
    "日": 3300, "月": 3100, "木": 1000, "门": 2000, "子": 5200, "女": 2700,
    "力": 2400, "干": 1300, "千": 1100, "大": 8800, "土": 900, "白": 2100,
    "见": 1900, "贝": 600, "瓜": 700, "爪": 300, "本": 2300, "术": 800,
    "于": 2200, "入": 1700, "八": 1600, "十": 2500, "未": 1000, "末": 600,
    "米": 1400, "又": 2800, "和": 5600, "难": 1900, "苦": 1700, "辛": 800,
    "村": 900, "寸": 400, "位": 2600, "立": 1500, "休": 700, "林": 1300,
    "明": 2900, "名": 2400, "买": 2100, "卖": 1800, "来": 6500, "下": 6200,
    "上": 6400, "点": 3800, "次": 3600, "再": 3400, "还": 4200, "无": 2500,
    "语": 1800, "知": 2300, "之": 3000, "志": 900, "油": 1000, "右": 800,
    "没": 3000, "美": 2500, "每": 2000, "过": 4100, "树": 0, "错": 2200,
    "钱": 2600, "吃": 4300, "真": 3700, "味": 1800, "送": 2000, "货": 1500,
    "店": 2100, "家": 5400, "老": 4600, "板": 1000, "菜": 2200, "品": 1900,
    "新": 3900, "鲜": 1200, "推": 1300, "荐": 500, "评": 1400, "退": 1100,
    "换": 1000, "坑": 600, "骗": 800, "脏": 700, "糟": 600, "糕": 500,
    "失": 1300, "望": 1500, "恶": 900, "期": 2000, "敷": 300, "衍": 200,
    "垃": 400, "圾": 400, "今": 3100, "员": 2300, "递": 900, "速": 1700,
    "度": 2800, "质": 1700, "量": 2600, "价": 2100, "格": 2000, "环": 1300,
    "境": 1100, "态": 1400, "物": 3000, "流": 2200, "包": 2000, "装": 1700,
    "感": 2500, "满": 2000, "惠": 800, "贴": 700, "周": 1800, "到": 5800,
    "道": 4400, "比": 3300, "较": 1800, "常": 3200, "尝": 600, "幼": 700,
    "稚": 300, "嘛": 1200, "哈": 2200, "曰": 100, "隹": 40, "禾": 300,
    "幺": 80, "务": 1900, "夭": 60, "决": 1600, "块": 1900, "漫": 900,
    "曼": 500, "羞": 400, "养": 1700, "士": 1400, "犬": 300, "若": 1200,
    "报": 2100, "曹": 300, "庄": 700, "扁": 300, "昔": 200, "亡": 500,
    "忙": 1600, "莘": 60, "刑": 700, "幸": 1800, "色": 2000, "塞": 600,
    "加": 3400, "目": 2400, "尼": 800, "泥": 700, "你": 9200, "我": 9900,
    "什": 2800, "始": 1600, "如": 3500, "台": 1500, "吧": 3000, "巳": 30,
    "己": 1400, "义": 1500, "益": 900, "雨": 1400, "鱼": 1300, "余": 800,
    "玉": 700, "宇": 600, "羽": 500, "予": 300, "愚": 200, "渔": 150,
    # multi-character words
    "幼稚": 600, "服务": 4200, "速度": 2900, "味道": 3100, "价格": 2700,
    "质量": 2600, "环境": 2400, "态度": 2300, "物流": 2000, "包装": 1800,
    "口感": 1700, "不错": 3600, "新鲜": 2100, "干净": 1900, "满意": 2500,
    "实惠": 1200, "贴心": 1100, "周到": 1000, "好吃": 3300, "难吃": 1400,
    "糟糕": 900, "失望": 1600, "恶心": 800, "过期": 700, "敷衍": 400,
    "推荐": 2000, "无语": 900, "今天": 3400, "快递": 1800, "店家": 1300,
    "老板": 1900, "饭菜": 800, "菜品": 900, "牛逼": 700, "垃圾": 1000,
    "辛苦": 1300, "骗人": 600, "坑爹": 0, "点赞": 800, "好评": 1200,
    "差评": 900, "退货": 700, "退款": 0, "换货": 400, "下次": 1500,
    "再来": 600, "咖啡": 1500, "分量": 800, "真的": 2600, "非常": 3200,
    "比较": 2400, "有点": 2200, "可以": 0, "还是": 0, "值得": 1100,
    "师傅": 0, "送货": 900, "外卖": 0, "体验": 0,
}
# drop curation placeholders
VOCAB = {w: f for w, f in VOCAB.items() if f > 0}

EMBED_DIM = 32

POS_TEMPLATES = [
    "{subj}很{pos}",
    "{subj}非常{pos}",
    "{subj}真的{pos}",
    "{subj}比较{pos}",
    "{subj}{pos}，推荐",
    "{subj}{pos}，下次再来",
    "{subj}{pos}，点赞",
    "今天{subj}很{pos}",
    "{subj}好，{subj2}{pos}",
    "{subj}很{pos}，满意",
    "老板辛苦了，{subj}{pos}",
    "{subj}{pos}，好评",
]

NEG_TEMPLATES = [
    "{subj}很{neg}",
    "{subj}非常{neg}",
    "{subj}真的{neg}",
    "{subj}比较{neg}",
    "{subj}{neg}，无语",
    "{subj}{neg}，再也不来",
    "{subj}{neg}，差评",
    "今天{subj}很{neg}",
    "{subj}差，{subj2}{neg}",
    "{subj}很{neg}，失望",
    "垃圾店家，{subj}{neg}",
    "{subj}{neg}，退货",
]

SUBJECTS = ["服务", "味道", "速度", "质量", "价格", "环境", "态度", "物流",
            "包装", "口感", "菜品", "分量", "快递"]
POS_WORDS = ["好", "不错", "快", "新鲜", "干净", "实惠", "贴心", "周到",
             "好吃", "满意"]
NEG_WORDS = ["差", "慢", "贵", "脏", "难吃", "糟糕", "敷衍", "恶心",
             "失望", "过期"]


def write_tsv(path, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def build_bundle():
    write_tsv(BUNDLE / "pinyin.tsv",
              [(ch, ",".join(sylls)) for ch, sylls in sorted(PINYIN.items())])
    write_tsv(BUNDLE / "disassembly.tsv",
              [(ch, comp) for ch, comp in sorted(DISASSEMBLY.items())])
    write_tsv(BUNDLE / "translations.tsv",
              [(w, "|".join(en)) for w, en in sorted(TRANSLATIONS.items())])
    write_tsv(BUNDLE / "phonemes.tsv",
              [(w, " ".join(ph)) for w, ph in sorted(PHONEMES.items())])
    write_tsv(BUNDLE / "phoneme_map.tsv",
              [(ph, ",".join(sylls)) for ph, sylls in sorted(PHONEME_MAP.items())])
    write_tsv(BUNDLE / "visual.tsv",
              [(ch, ",".join(f"{n}:{s}" for n, s in nbrs))
               for ch, nbrs in sorted(VISUAL.items())])
    write_tsv(BUNDLE / "vocab.tsv",
              [(w, str(f)) for w, f in sorted(VOCAB.items())])

    # unit-norm embeddings for every vocab word and every known character
    tokens = sorted(set(VOCAB) | set(PINYIN))
    rng = np.random.default_rng(20240613)
    rows = []
    for tok in tokens:
        v = rng.standard_normal(EMBED_DIM)
        v /= np.linalg.norm(v)
        rows.append((tok, " ".join(repr(float(x)) for x in v)))
    write_tsv(BUNDLE / "embeddings.tsv", rows)


def check_bundle():
    vocab_chars = {c for w in VOCAB for c in w}
    missing = vocab_chars - set(PINYIN)
    if missing:
        raise SystemExit(f"vocab chars missing pinyin: {sorted(missing)}")
    comps = list(DISASSEMBLY.values())
    if len(comps) != len(set(comps)):
        raise SystemExit("ambiguous disassembly inverse")
    for ch, nbrs in VISUAL.items():
        scores = [s for _, s in nbrs]
        if scores != sorted(scores, reverse=True):
            raise SystemExit(f"visual scores not descending for {ch}")


def build_toy_dataset():
    rng = random.Random(20240614)
    rows = []
    for label, templates, words in ((1, POS_TEMPLATES, POS_WORDS),
                                    (0, NEG_TEMPLATES, NEG_WORDS)):
        seen = set()
        while len(seen) < 260:
            tpl = rng.choice(templates)
            subj = rng.choice(SUBJECTS)
            subj2 = rng.choice([s for s in SUBJECTS if s != subj])
            word = rng.choice(words)
            text = tpl.format(subj=subj, subj2=subj2,
                              pos=word, neg=word)
            if text not in seen:
                seen.add(text)
                rows.append((str(label), text))
    rng.shuffle(rows)
    n_test = 100
    test, train = rows[:n_test], rows[n_test:]
    write_tsv(TOY / "train.tsv", train)
    write_tsv(TOY / "test.tsv", test)


if __name__ == "__main__":
    check_bundle()
    build_bundle()
    build_toy_dataset()
