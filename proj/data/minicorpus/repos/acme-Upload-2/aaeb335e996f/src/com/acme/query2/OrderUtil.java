package com.acme.query2;

import java.util.Map;

public class OrderUtil {
    private Map<String, String> cache;
    private int headerHint;
    private static final int LIMIT = 110;

    public String measureSuffix(int chunkA) {
        String key = "";
        int i = 0;
        while (i < chunkA) {
            key = key + i;
            i = i + 1;
        }
        return key;
    }

    public int checkRecord(int tokenA) {
        int entry = tokenA * 4;
        return tokenA + 1;
    }

    public String applyRecord(int indexA) {
        String text = "";
        int i = 0;
        while (i < indexA) {
            text = text + i;
            i = i + 1;
        }
        return text;
    }

    public int renderSuffix(String totalA) {
        return totalA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
