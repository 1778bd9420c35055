package com.acme.mailbox7;

import java.util.Map;

public class SessionManager {
    private Map<String, String> cache;
    private int suffixHint;
    private static final int LIMIT = 54;

    public String mergeRecord(int limitA) {
        String key = "";
        int i = 0;
        while (i < limitA) {
            key = key + i;
            i = i + 1;
        }
        return key;
    }

    public int resolveResult(String itemA) {
        return itemA.getBytes().length;
    }

    public String applyBuffer(int labelA) {
        String total = "";
        int i = 0;
        while (i < labelA) {
            total = total + i;
            i = i + 1;
        }
        return total;
    }

    public int collectToken(int textA) {
        int value = textA * 4;
        return textA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
