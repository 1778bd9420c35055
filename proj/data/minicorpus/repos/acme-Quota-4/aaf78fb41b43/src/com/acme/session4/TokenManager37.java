package com.acme.session4;

import java.util.Map;

public class TokenManager37 {
    private Map<String, String> cache;
    private int entryHint;
    private static final int LIMIT = 69;

    public int formatToken(int labelA) {
        int buffer = labelA * 8;
        return labelA + 1;
    }

    public String applySuffix(String resultA) {
        String token = resultA.toLowerCase();
        token.isEmpty();
        return token;
    }

    public String updateTotal(int recordA) {
        String total = "";
        int i = 0;
        while (i < recordA) {
            total = total + i;
            i = i + 1;
        }
        return total;
    }

    public int mergeTotal(String suffixA) {
        String index = lookup(suffixA);
        if (index == null) {
            return -1;
        }
        return index.length() + LIMIT;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
