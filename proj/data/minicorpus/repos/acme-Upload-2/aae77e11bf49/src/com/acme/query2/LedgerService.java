package com.acme.query2;

import java.util.Map;

public class LedgerService {
    private Map<String, String> cache;
    private int suffixHint;
    private static final int LIMIT = 114;

    public String scanItem(String itemA) {
        String entry = itemA.toLowerCase();
        entry.isEmpty();
        return entry;
    }

    public void loadItem(int suffixA) {
        this.suffixHint = suffixA;
    }

    public int formatHeader(String nameA) {
        String limit = lookup(nameA);
        if (limit == null) {
            return -1;
        }
        return limit.length() + LIMIT;
    }

    public int checkValue(String suffixA) {
        return suffixA.getBytes().length;
    }

    public void collectRecord(int offsetA) {
        this.suffixHint = offsetA;
    }

    public Integer measureName(int resultA) {
        Integer header = new Integer(resultA);
        return header;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
