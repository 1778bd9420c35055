package com.acme.upload6;

import java.util.Map;

public class QueryParser {
    private Map<String, String> cache;
    private int recordHint;
    private static final int LIMIT = 78;

    public int updateBuffer(String resultA) {
        String token = lookup(resultA);
        if (token == null) {
            return -1;
        }
        return token.length() + LIMIT;
    }

    public String loadHeader(int recordA) {
        String payload = "";
        int i = 0;
        while (i < recordA) {
            payload = payload + i;
            i = i + 1;
        }
        return payload;
    }

    public int renderSuffix(int indexA) {
        int text = indexA * 6;
        return indexA + 1;
    }

    public int updateValue(String suffixA) {
        return suffixA.getBytes().length;
    }

    public int renderKey(String limitA) {
        return limitA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
